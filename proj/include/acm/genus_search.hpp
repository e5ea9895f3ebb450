#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acm/continuity.hpp"
#include "acm/genus_set.hpp"
#include "acm/oseq_graph.hpp"
#include "acm/ranges.hpp"

namespace acm {

/// Pruned depth-first search for an O-sequence of genus g in a tree family.
/// Children are explored leftmost first; subtrees whose root already exceeds
/// g are skipped, since genus never decreases along tree edges.
/// Returns the first witness in that order, or nullopt.
std::optional<OSequence> genusSearch(Int g, const TreeFamily& family);

/// One pruned sweep answering several targets at once. Each returned witness
/// is exactly the one genusSearch(target, family) would return; the prune
/// bound shrinks to the largest still-unresolved target as targets are hit.
std::map<Int, OSequence> genusSearchMany(std::span<const Int> targets, const TreeFamily& family);

/// Where the status of a value of R_d was settled.
enum class Provenance { Step1, Step2, Searched, PostLoop };

std::string toString(Provenance p);

struct ClassificationStats {
  Int certainGenera = 0;
  Int certainGaps = 0;
  Int searched = 0;

  friend bool operator==(const ClassificationStats&, const ClassificationStats&) = default;
};

/// Every value of R_d classified as an aCM genus or a gap.
struct DegreeClassification {
  Int d = 1;
  GenusSet genera{1};
  std::vector<GapCertificate> gaps;   // ascending by value
  std::map<Int, OSequence> witnesses;  // only values decided by search

  std::vector<Int> gapValues() const;
  Provenance provenance(Int g) const;
  ClassificationStats stats() const;

  friend bool operator==(const DegreeClassification&, const DegreeClassification&) = default;
};

struct StepTimings {
  double step1Ms = 0;
  double step2Ms = 0;
  double step3Ms = 0;
  double totalMs() const { return step1Ms + step2Ms + step3Ms; }
};

struct ClassifyOptions {
  /// Targets within one length are split across this many threads.
  unsigned workers = 1;
  /// Optional seed/sink for the certain-genera recursion.
  ContinuityCache* cache = nullptr;
  StepTimings* timings = nullptr;
};

/// All aCM genera of degree d: certain genera from the shifted-union
/// recursion, certified gaps from the range formulas, and pruned searches in
/// the fixed multiplicity/length trees for whatever is left.
DegreeClassification acmGenera(Int d, const ClassifyOptions& options = {});

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// {g(h) : e(h) = d} by direct recursive generation, independent of the tree
/// code. Throws ResourceError after visiting more than budget partial sequences.
GenusSet bruteForceGenera(Int d, std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace acm
