#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acm/integer.hpp"

namespace acm {

/// One term C(top, bottom) of a binomial expansion.
struct BinomialTerm {
  Int top;
  Int bottom;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The greedy binomial expansion
///   a = C(k(t), t) + C(k(t-1), t-1) + ... + C(k(j), j)
/// with k(t) > k(t-1) > ... > k(j) >= j >= 1. Terms are stored with
/// descending bottom index, starting at the base t.
struct BinomialExpansion {
  Int value = 0;
  Int base = 0;
  std::vector<BinomialTerm> terms;

  /// Sum of the stored terms; equals value for any expansion built by expand().
  Int sum() const;
};

BinomialExpansion expand(Int a, Int t);

/// a^<t>: every term C(k, i) of the expansion of a in base t shifted to
/// C(k + 1, i + 1). Zero stays zero.
Int macaulayBound(Int a, Int t);

/// True iff the list is a finite O-sequence: it starts with 1, every entry is
/// at least 1 and h[t+1] <= h[t]^<t> for t >= 1. h[1] is unconstrained.
bool isAdmissible(std::span<const Int> candidate);

/// A finite O-sequence (1, h_1, ..., h_{s-1}), stored without trailing zeros.
/// Immutable; every constructor validates admissibility.
class OSequence {
 public:
  /// Throws std::invalid_argument when the entries are not admissible.
  explicit OSequence(std::vector<Int> entries);

  static std::optional<OSequence> make(std::vector<Int> entries);

  /// Accepts "1,2,3,1" and the exponent shorthand "1,2^3,1^2".
  /// Whitespace and one pair of surrounding parentheses are ignored.
  static OSequence parse(std::string_view text);

  /// (1^s)
  static OSequence ones(Int s);

  std::span<const Int> entries() const { return h_; }
  Int operator[](std::size_t i) const { return h_[i]; }
  Int at(Int i) const { return i >= 0 && i < length() ? h_[static_cast<std::size_t>(i)] : 0; }
  Int length() const { return static_cast<Int>(h_.size()); }
  Int multiplicity() const { return multiplicity_; }

  /// Canonical "1,h_1,...,h_{s-1}".
  std::string str() const;

  friend bool operator==(const OSequence& a, const OSequence& b) { return a.h_ == b.h_; }
  /// Lexicographic on entries; used for ordered containers only.
  friend std::strong_ordering operator<=>(const OSequence& a, const OSequence& b) {
    return a.h_ <=> b.h_;
  }

 private:
  struct Trusted {};
  OSequence(Trusted, std::vector<Int> entries);

  std::vector<Int> h_;
  Int multiplicity_ = 0;
};

std::ostream& operator<<(std::ostream& os, const OSequence& h);

/// Arithmetic genus sum_{j=2}^{s-1} (j-1) h_j.
Int genus(const OSequence& h);

/// Tabulated Hilbert functions of an aCM curve with h-vector h:
/// H_Z is the first sum of h, H_C the second; the Hilbert polynomial is
/// leading * t + constant with leading = e(h) and constant = 1 - g.
struct HilbertData {
  OSequence hVector;
  std::vector<Int> zeroDimFunction;
  std::vector<Int> curveFunction;
  Int leading = 0;
  Int constant = 0;

  Int polynomialAt(Int t) const { return leading * t + constant; }
  /// s - 2: H_C agrees with the polynomial from this degree on.
  Int postulationRegularity() const { return hVector.length() - 2; }

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

HilbertData hilbertData(const OSequence& h, Int tMax);

/// Genus recovered as 1 + (s-2) d - H_C(s-2); valid for s >= 2.
Int genusFromHilbert(const OSequence& h);

}  // namespace acm

template <>
struct std::hash<acm::OSequence> {
  std::size_t operator()(const acm::OSequence& h) const noexcept;
};
