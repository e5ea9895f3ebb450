#include "acm/continuity.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace acm {

Int ContinuityTable::at(Int d) const {
  if (d < 1 || d > dMax()) throw std::out_of_range("ContinuityTable: degree outside table");
  return values[static_cast<std::size_t>(d - 1)];
}

ContinuityTable mSequence(Int dMax) {
  if (dMax < 1) throw std::invalid_argument("mSequence: dMax must be positive");
  ContinuityTable table;
  auto& m = table.values;  // m[d-1] = m_d
  m.push_back(0);
  for (Int d = 2; d <= dMax; ++d) {
    Int running = m[static_cast<std::size_t>(d - 2)];
    for (Int k = 2; k <= d - 1; ++k)
      if (choose2(k) - 1 <= running)
        running = std::max(running, m[static_cast<std::size_t>(d - k - 1)] + choose2(k));
    m.push_back(running);
  }
  return table;
}

GenusSet continuityPrefix(Int d) {
  GenusSet prefix(d);
  prefix.insertPrefix(mSequence(d).at(d));
  return prefix;
}

ContinuityCache ContinuityCache::load(const std::filesystem::path& path) {
  ContinuityCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string dTag, mTag, gTag, hex, extra;
    Int d = 0;
    Int m = 0;
    if (!(fields >> dTag >> d >> mTag >> m >> gTag >> hex) || (fields >> extra) || dTag != "d" || mTag != "m" ||
        gTag != "genera" || d < 1 || m < 0) {
      ++cache.rejected_;
      continue;
    }
    auto set = GenusSet::fromHex(d, hex);
    if (!set) {
      ++cache.rejected_;
      continue;
    }
    cache.records_.insert_or_assign(d, Record{m, std::move(*set)});
  }
  return cache;
}

void ContinuityCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  for (const auto& [d, r] : records_) out << "d " << d << " m " << r.m << " genera " << r.genera.toHex() << '\n';
}

const ContinuityCache::Record* ContinuityCache::find(Int d) const {
  const auto it = records_.find(d);
  return it == records_.end() ? nullptr : &it->second;
}

void ContinuityCache::store(Int d, Int m, const GenusSet& genera) {
  records_.insert_or_assign(d, Record{m, genera});
}

const GenusSet& CertainGenera::at(Int d) {
  if (d < 1) throw std::invalid_argument("certainGenera: d must be positive");
  if (m_.dMax() < d) m_ = mSequence(d);
  while (static_cast<Int>(sets_.size()) < d) {
    const Int e = static_cast<Int>(sets_.size()) + 1;
    if (cache_ != nullptr) {
      if (const auto* r = cache_->find(e); r != nullptr && r->m == m_.at(e)) {
        GenusSet prefix(e);
        prefix.insertPrefix(r->m);
        if (prefix.isSubsetOf(r->genera)) {
          sets_.push_back(r->genera);
          continue;
        }
      }
    }
    GenusSet next(e);
    if (e == 1) next.insert(0);
    for (Int i = 1; i < e; ++i) next.unionShifted(sets_[static_cast<std::size_t>(i - 1)], choose2(e - i));
    sets_.push_back(std::move(next));
  }
  return sets_[static_cast<std::size_t>(d - 1)];
}

void CertainGenera::flushTo(ContinuityCache& cache) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const Int d = static_cast<Int>(i) + 1;
    cache.store(d, m_.at(d), sets_[i]);
  }
}

GenusSet certainGenera(Int d) {
  CertainGenera memo;
  return memo.at(d);
}

}  // namespace acm
