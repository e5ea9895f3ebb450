#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "acm/genus_set.hpp"

namespace acm {

/// m_1, ..., m_dMax; every integer in {0, ..., m_d} is an aCM genus of degree d.
struct ContinuityTable {
  std::vector<Int> values;

  Int dMax() const { return static_cast<Int>(values.size()); }
  /// m_d for 1 <= d <= dMax.
  Int at(Int d) const;

  friend bool operator==(const ContinuityTable&, const ContinuityTable&) = default;
};

/// m_1 = 0 and, for d > 1, M starts at m_{d-1} and for k = 2, ..., d-1 in
/// order becomes max(M, m_{d-k} + C(k,2)) whenever C(k,2) - 1 <= M, where
/// the test reads the running M.
ContinuityTable mSequence(Int dMax);

/// {0, ..., m_d} as a subset of R_d.
GenusSet continuityPrefix(Int d);

/// Persisted certain-genera sets, one line per degree:
///   d <d> m <m_d> genera <hex>
/// Records are advisory: anything that fails validation is ignored.
class ContinuityCache {
 public:
  struct Record {
    Int m = 0;
    GenusSet genera;
  };

  /// Missing files yield an empty cache; malformed lines are skipped.
  static ContinuityCache load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const Record* find(Int d) const;
  void store(Int d, Int m, const GenusSet& genera);
  std::size_t size() const { return records_.size(); }
  /// Lines rejected by load().
  std::size_t rejected() const { return rejected_; }

 private:
  std::map<Int, Record> records_;
  std::size_t rejected_ = 0;
};

/// Memo of the certain-genera recursion
///   G~_1 = {0},  G~_d = union_{i<d} (G~_i + C(d-i,2)) intersected with R_d.
/// A cache may seed entries; a seeded record is used only when its m field
/// matches m_d and it contains {0..m_d}, otherwise it is recomputed.
class CertainGenera {
 public:
  CertainGenera() = default;
  explicit CertainGenera(ContinuityCache* cache) : cache_(cache) {}

  const GenusSet& at(Int d);
  /// Records computed in this session, for writing back.
  void flushTo(ContinuityCache& cache);

 private:
  ContinuityCache* cache_ = nullptr;
  std::vector<GenusSet> sets_;  // sets_[d-1] = G~_d
  ContinuityTable m_;
};

GenusSet certainGenera(Int d);

}  // namespace acm
