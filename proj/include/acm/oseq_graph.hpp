#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acm/macaulay.hpp"

namespace acm {

enum class TreeKind {
  Full,               // every finite O-sequence, root (1)
  FixedLength,        // length s, root (1^s)
  FixedMultiplicity,  // multiplicity d, root (1, d-1)
  FixedBoth,          // multiplicity d and length s, root (1, d-s+1, 1^{s-2})
};

/// Selects one of the four spanning trees. The full and fixed-length trees are
/// infinite, so their factories demand a multiplicity cap.
class TreeFamily {
 public:
  static TreeFamily full(Int cap);
  static TreeFamily fixedLength(Int s, Int cap);
  static TreeFamily fixedMultiplicity(Int d);
  /// d < s is accepted here and reported as an empty family by rootOf().
  static TreeFamily fixedBoth(Int d, Int s);

  TreeKind kind() const { return kind_; }
  std::optional<Int> length() const { return length_; }
  std::optional<Int> multiplicity() const { return multiplicity_; }
  std::optional<Int> cap() const { return cap_; }

  /// Upper bound on the multiplicity of any vertex.
  Int multiplicityLimit() const;
  bool empty() const;
  std::string describe() const;

 private:
  TreeFamily(TreeKind kind, std::optional<Int> s, std::optional<Int> d, std::optional<Int> cap)
      : kind_(kind), length_(s), multiplicity_(d), cap_(cap) {}

  TreeKind kind_;
  std::optional<Int> length_;
  std::optional<Int> multiplicity_;
  std::optional<Int> cap_;
};

/// h + e_add (- e_remove). add may equal the length, which appends an entry.
struct EdgeStep {
  Int add = 0;
  std::optional<Int> remove;
};

/// The stepped sequence with trailing zeros dropped, or nullopt when the
/// result is not a finite O-sequence.
std::optional<OSequence> applyStep(const OSequence& h, const EdgeStep& step);

bool contains(const TreeFamily& family, const OSequence& h);

/// Throws DomainError for an empty family (fixedBoth with d < s).
OSequence rootOf(const TreeFamily& family);

/// Tree children of h, ordered by the index of the increased entry.
/// Throws DomainError when h is not a vertex of the family.
std::vector<OSequence> children(const OSequence& h, const TreeFamily& family);

/// Tree parent of h; nullopt at the root. Throws DomainError when h is not a vertex.
std::optional<OSequence> parent(const OSequence& h, const TreeFamily& family);

namespace detail {
/// children() without the membership check; h must be a vertex of family.
std::vector<OSequence> childrenOf(const OSequence& h, const TreeFamily& family);
}  // namespace detail

inline constexpr std::uint64_t kDefaultVisitBudget = 2'000'000;

/// Depth-first preorder visit of the whole tree. Throws ResourceError once
/// more than budget vertices have been reached.
void visitAll(const TreeFamily& family, const std::function<void(const OSequence&)>& visitor,
              std::uint64_t budget = kDefaultVisitBudget);

struct EnumerateOptions {
  std::uint64_t budget = kDefaultVisitBudget;
  /// Subtrees hanging off the root's children are split among this many
  /// threads; the returned order is the sequential preorder regardless.
  unsigned workers = 1;
};

std::vector<OSequence> enumerateAll(const TreeFamily& family, const EnumerateOptions& options = {});

/// Tree edges (parent, child) in preorder of the child.
struct TreeExport {
  OSequence root;
  std::vector<std::pair<OSequence, OSequence>> edges;
};

TreeExport exportTree(const TreeFamily& family, std::uint64_t budget = kDefaultVisitBudget);
std::string toDot(const TreeExport& tree);

/// Strict partial order generated by moving one unit from an entry to a
/// later one. Both sequences must have the same multiplicity d <= 20.
bool precedes(const OSequence& lower, const OSequence& upper);

inline constexpr Int kMaxPrecedesMultiplicity = 20;

/// Compares at the largest index where the sequences differ. Both must have
/// the same length and multiplicity; throws DomainError otherwise.
std::strong_ordering totalCompare(const OSequence& a, const OSequence& b);

}  // namespace acm
