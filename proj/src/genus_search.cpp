#include "acm/genus_search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "acm/errors.hpp"

namespace acm {

std::optional<OSequence> genusSearch(Int g, const TreeFamily& family) {
  std::vector<OSequence> stack{rootOf(family)};
  while (!stack.empty()) {
    OSequence h = std::move(stack.back());
    stack.pop_back();
    const Int current = genus(h);
    if (current == g) return h;
    if (current < g) {
      auto kids = detail::childrenOf(h, family);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
  }
  return std::nullopt;
}

std::map<Int, OSequence> genusSearchMany(std::span<const Int> targets, const TreeFamily& family) {
  std::map<Int, OSequence> found;
  std::set<Int> open(targets.begin(), targets.end());
  if (open.empty()) return found;
  std::vector<OSequence> stack{rootOf(family)};
  while (!stack.empty() && !open.empty()) {
    OSequence h = std::move(stack.back());
    stack.pop_back();
    const Int current = genus(h);
    if (open.erase(current) != 0) {
      found.emplace(current, h);
      if (open.empty()) break;
    }
    if (current < *open.rbegin()) {
      auto kids = detail::childrenOf(h, family);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
  }
  return found;
}

std::string toString(Provenance p) {
  switch (p) {
    case Provenance::Step1: return "step1";
    case Provenance::Step2: return "step2";
    case Provenance::Searched: return "searched";
    case Provenance::PostLoop: return "post-loop";
  }
  return "unknown";
}

std::vector<Int> DegreeClassification::gapValues() const {
  std::vector<Int> out;
  out.reserve(gaps.size());
  for (const auto& c : gaps) out.push_back(c.value);
  return out;
}

Provenance DegreeClassification::provenance(Int g) const {
  if (genera.contains(g)) return witnesses.contains(g) ? Provenance::Searched : Provenance::Step1;
  const auto it = std::lower_bound(gaps.begin(), gaps.end(), g,
                                   [](const GapCertificate& c, Int v) { return c.value < v; });
  if (it == gaps.end() || it->value != g) throw std::out_of_range("value outside R_d");
  if (it->reason != GapReason::Searched) return Provenance::Step2;
  return it->rule == "post-loop" ? Provenance::PostLoop : Provenance::Searched;
}

ClassificationStats DegreeClassification::stats() const {
  ClassificationStats st;
  const auto searchedGaps =
      std::count_if(gaps.begin(), gaps.end(), [](const GapCertificate& c) { return c.reason == GapReason::Searched; });
  st.certainGenera = genera.count() - static_cast<Int>(witnesses.size());
  st.certainGaps = static_cast<Int>(gaps.size()) - searchedGaps;
  st.searched = static_cast<Int>(witnesses.size()) + searchedGaps;
  return st;
}

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::map<Int, OSequence> searchTargets(const std::vector<Int>& targets, const TreeFamily& family, unsigned workers) {
  if (workers <= 1 || targets.size() <= 1) return genusSearchMany(targets, family);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(targets.size()));
  std::vector<std::map<Int, OSequence>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::vector<Int> mine;
          for (std::size_t i = w; i < targets.size(); i += workers) mine.push_back(targets[i]);
          parts[w] = genusSearchMany(mine, family);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::map<Int, OSequence> merged;
  for (auto& part : parts) merged.merge(part);
  return merged;
}

}  // namespace

DegreeClassification acmGenera(Int d, const ClassifyOptions& options) {
  if (d < 1) throw std::invalid_argument("acmGenera: d must be positive");
  StepTimings timings;
  DegreeClassification out{d, GenusSet(d), {}, {}};

  auto clock = Clock::now();
  {
    CertainGenera memo(options.cache);
    out.genera = memo.at(d);
    if (options.cache != nullptr) memo.flushTo(*options.cache);
  }
  timings.step1Ms = millisSince(clock);

  if (d <= 2) {
    if (options.timings != nullptr) *options.timings = timings;
    return out;
  }

  clock = Clock::now();
  const RangeTable table(d);
  out.gaps = certifiedGaps(table);
  timings.step2Ms = millisSince(clock);

  clock = Clock::now();
  GenusSet undecided(d);
  undecided.insertPrefix(undecided.upper());
  for (const Int g : out.genera.values()) undecided.erase(g);
  for (const auto& c : out.gaps) undecided.erase(c.value);

  for (Int s = 2; s <= d - 3; ++s) {
    const GenusRange& range = table.at(s);
    std::vector<Int> targets;
    for (const Int g : undecided.values()) {
      if (g > range.maxGenus) break;
      if (g < range.minGenus) {
        out.gaps.push_back({g, GapReason::Searched, s, 0, "below-range"});
        undecided.erase(g);
      } else {
        targets.push_back(g);
      }
    }
    if (targets.empty()) continue;
    for (auto& [g, witness] : searchTargets(targets, TreeFamily::fixedBoth(d, s), options.workers)) {
      out.genera.insert(g);
      undecided.erase(g);
      out.witnesses.emplace(g, std::move(witness));
    }
  }

  for (const Int g : undecided.values()) {
    for (Int s = std::max<Int>(2, d - 2); s <= d; ++s)
      if (table.at(s).contains(g))
        throw std::logic_error("undecided value " + std::to_string(g) + " lies in the unexamined range s=" +
                               std::to_string(s));
    out.gaps.push_back({g, GapReason::Searched, 0, 0, "post-loop"});
  }
  std::sort(out.gaps.begin(), out.gaps.end(),
            [](const GapCertificate& a, const GapCertificate& b) { return a.value < b.value; });
  timings.step3Ms = millisSince(clock);

  if (options.timings != nullptr) *options.timings = timings;
  return out;
}

namespace {

class BruteForce {
 public:
  BruteForce(Int d, std::uint64_t budget) : d_(d), budget_(budget), found_(d) {}

  GenusSet run() {
    entries_.assign(1, 1);
    extend(d_ - 1, 0);
    return std::move(found_);
  }

 private:
  // entries_ holds (1, h_1, ..., h_t); rest is the multiplicity still to place.
  void extend(Int rest, Int g) {
    if (++visited_ > budget_)
      throw ResourceError("brute-force budget of " + std::to_string(budget_) + " partial sequences exceeded at d=" +
                          std::to_string(d_));
    if (rest == 0) {
      found_.insert(g);
      return;
    }
    const Int t = static_cast<Int>(entries_.size()) - 1;
    const Int hi = t == 0 ? rest : std::min(rest, macaulayBound(entries_.back(), t));
    for (Int v = 1; v <= hi; ++v) {
      entries_.push_back(v);
      extend(rest - v, g + t * v);  // the new entry sits at index t + 1
      entries_.pop_back();
    }
  }

  Int d_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<Int> entries_;
  GenusSet found_;
};

}  // namespace

GenusSet bruteForceGenera(Int d, std::uint64_t budget) {
  if (d < 1) throw std::invalid_argument("bruteForceGenera: d must be positive");
  return BruteForce(d, budget).run();
}

}  // namespace acm
