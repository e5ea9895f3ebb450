#include "acm/regularity.hpp"

#include <stdexcept>
#include <string>

#include "acm/genus_search.hpp"
#include "acm/ranges.hpp"

namespace acm {

NotAcmGenusError::NotAcmGenusError(Int d, Int g, Reason reason)
    : DomainError(std::to_string(g) + " is not an aCM genus in degree " + std::to_string(d) + " (" +
                  (reason == Reason::Gap ? "gap" : "out-of-range") + ")"),
      reason_(reason) {}

RegularityAnswer minAcmRegularity(Int d, Int g) {
  if (d < 1) throw std::invalid_argument("minAcmRegularity: d must be positive");
  if (g < 0 || g > choose2(d - 1)) throw NotAcmGenusError(d, g, NotAcmGenusError::Reason::OutOfRange);
  if (d == 1) return {1, 0, 1, OSequence::ones(1), -1};

  for (Int s = 2; s <= d && minGenus(s) <= g; ++s) {
    if (g > maxGenus(d, s)) continue;
    if (auto witness = genusSearch(g, TreeFamily::fixedBoth(d, s))) {
      RegularityAnswer answer{d, g, s, std::move(*witness), s - 2};
      if (answer.witness.length() != answer.postulationRegularity + 2)
        throw std::logic_error("witness length disagrees with postulation regularity");
      return answer;
    }
  }
  throw NotAcmGenusError(d, g, NotAcmGenusError::Reason::Gap);
}

}  // namespace acm
