#pragma once

#include "acm/errors.hpp"
#include "acm/macaulay.hpp"

namespace acm {

/// Smallest length s of an O-sequence with multiplicity d and genus g. The
/// curve regularity is s; the postulation regularity is s - 2.
struct RegularityAnswer {
  Int d = 0;
  Int g = 0;
  Int minRegularity = 0;
  OSequence witness = OSequence::ones(1);
  Int postulationRegularity = 0;

  friend bool operator==(const RegularityAnswer&, const RegularityAnswer&) = default;
};

class NotAcmGenusError : public DomainError {
 public:
  enum class Reason { Gap, OutOfRange };

  NotAcmGenusError(Int d, Int g, Reason reason);
  Reason reason() const { return reason_; }
  /// "gap" or "out-of-range".
  const char* reasonName() const { return reason_ == Reason::Gap ? "gap" : "out-of-range"; }

 private:
  Reason reason_;
};

/// Scans lengths upward and searches each fixed multiplicity/length tree
/// whose range holds g. Throws NotAcmGenusError if no length works.
RegularityAnswer minAcmRegularity(Int d, Int g);

}  // namespace acm
