#pragma once

#include <string>
#include <vector>

#include "acm/macaulay.hpp"

namespace acm {

/// C(s-1, 2): the smallest genus of any O-sequence of length s, whatever the multiplicity.
Int minGenus(Int s);

/// (1, d-s+1, 1^{s-2}), or (1^s) when d = s. Throws DomainError when G_d^s is empty.
OSequence minOSeq(Int d, Int s);

/// Maximum of G_d^s under totalCompare, built by raising the highest entry
/// that can still grow, one unit of multiplicity at a time from (1^s).
/// Throws DomainError when G_d^s is empty.
OSequence maxOSeq(Int d, Int s);

Int maxGenus(Int d, Int s);

/// (1, 2^{d-s}, 1^{2s-d-1}) and its genus C(s-1,2) + C(d-s,2); both require
/// floor(d/2) + 1 <= s <= d.
OSequence closedFormMaxOSeq(Int d, Int s);
Int closedFormMaxGenus(Int d, Int s);

/// The (d,s)-range [minGenus, maxGenus] with its extremal sequences.
struct GenusRange {
  Int d = 0;
  Int s = 0;
  Int minGenus = 0;
  Int maxGenus = 0;
  OSequence minWitness = OSequence::ones(1);
  OSequence maxWitness = OSequence::ones(1);

  bool contains(Int g) const { return minGenus <= g && g <= maxGenus; }
  friend bool operator==(const GenusRange&, const GenusRange&) = default;
};

GenusRange genusRange(Int d, Int s);

/// All non-empty (d,s)-ranges of one degree, built in one sweep per length.
/// Lengths run over 2..d (just 1 when d = 1).
class RangeTable {
 public:
  explicit RangeTable(Int d);

  Int degree() const { return d_; }
  Int minLength() const { return d_ == 1 ? 1 : 2; }
  Int maxLength() const { return d_; }
  const GenusRange& at(Int s) const;
  const std::vector<GenusRange>& all() const { return ranges_; }
  /// True iff g lies in at least one (d,s)-range.
  bool covers(Int g) const;

 private:
  Int d_;
  std::vector<GenusRange> ranges_;
};

/// Lengths s with max(G_d^s) < minGenus(s+1) - 1, from the exact integer
/// form of (2d+1 - sqrt(8d-15))/2 < s <= d-1. Empty for d <= 2.
std::vector<Int> separatedAfter(Int d);
bool isSeparated(Int d, Int s);

/// Top-of-range holes g_s(d) - (d-s-3), ..., g_s(d) - 1. Outside
/// 7 <= floor(d/2)+1 <= s <= d-4 the list is empty and the flag is raised.
struct HoleList {
  std::vector<Int> values;
  bool outsideHypotheses = false;
};

HoleList holes(Int d, Int s);

enum class GapReason {
  BetweenRanges,  // strictly between max(G_d^s) and minGenus(s+1)
  HoleAlwaysGap,  // hole g_s(d) - i below minGenus(s+1)
  Searched,       // established by exhaustive pruned search
};

std::string toString(GapReason reason);

/// Why a value of R_d is not an aCM genus.
struct GapCertificate {
  Int value = 0;
  GapReason reason = GapReason::Searched;
  Int length = 0;  // s; 0 for post-loop gaps
  Int offset = 0;  // i, for HoleAlwaysGap
  /// "separated-ranges", "outside-ranges", "top-hole", "below-range" or "post-loop".
  std::string rule;

  friend bool operator==(const GapCertificate&, const GapCertificate&) = default;
};

/// Gaps that follow from range endpoints and hole formulas alone, ascending
/// and deduplicated (the first applicable certificate is kept).
std::vector<GapCertificate> certifiedGaps(Int d);
std::vector<GapCertificate> certifiedGaps(const RangeTable& table);

/// Re-derives a non-searched certificate from the range formulas.
bool verifyCertificate(Int d, const GapCertificate& certificate);

}  // namespace acm
