#include "acm/oseq_graph.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "acm/errors.hpp"

namespace acm {

TreeFamily TreeFamily::full(Int cap) {
  if (cap < 1) throw std::invalid_argument("the full O-sequence tree needs a multiplicity cap >= 1");
  return {TreeKind::Full, std::nullopt, std::nullopt, cap};
}

TreeFamily TreeFamily::fixedLength(Int s, Int cap) {
  if (s < 1) throw std::invalid_argument("fixed-length tree needs s >= 1");
  if (cap < 1) throw std::invalid_argument("the fixed-length tree needs a multiplicity cap >= 1");
  return {TreeKind::FixedLength, s, std::nullopt, cap};
}

TreeFamily TreeFamily::fixedMultiplicity(Int d) {
  if (d < 1) throw std::invalid_argument("fixed-multiplicity tree needs d >= 1");
  return {TreeKind::FixedMultiplicity, std::nullopt, d, std::nullopt};
}

TreeFamily TreeFamily::fixedBoth(Int d, Int s) {
  if (d < 1 || s < 1) throw std::invalid_argument("fixed multiplicity/length tree needs d, s >= 1");
  return {TreeKind::FixedBoth, s, d, std::nullopt};
}

Int TreeFamily::multiplicityLimit() const { return multiplicity_ ? *multiplicity_ : *cap_; }

bool TreeFamily::empty() const {
  switch (kind_) {
    case TreeKind::Full:
    case TreeKind::FixedMultiplicity:
      return false;
    case TreeKind::FixedLength:
      return *length_ > *cap_;
    case TreeKind::FixedBoth:
      // Length 1 only exists with multiplicity 1.
      return *multiplicity_ < *length_ || (*length_ == 1 && *multiplicity_ > 1);
  }
  return true;
}

std::string TreeFamily::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case TreeKind::Full: os << "full tree (cap " << *cap_ << ")"; break;
    case TreeKind::FixedLength: os << "length-" << *length_ << " tree (cap " << *cap_ << ")"; break;
    case TreeKind::FixedMultiplicity: os << "multiplicity-" << *multiplicity_ << " tree"; break;
    case TreeKind::FixedBoth: os << "multiplicity-" << *multiplicity_ << " length-" << *length_ << " tree"; break;
  }
  return os.str();
}

std::optional<OSequence> applyStep(const OSequence& h, const EdgeStep& step) {
  std::vector<Int> v(h.entries().begin(), h.entries().end());
  const auto len = static_cast<Int>(v.size());
  if (step.remove) {
    const Int r = *step.remove;
    if (r < 1 || r >= len || r == step.add) return std::nullopt;
    --v[static_cast<std::size_t>(r)];
  }
  if (step.add < 1 || step.add > len) return std::nullopt;
  if (step.add == len)
    v.push_back(1);
  else
    ++v[static_cast<std::size_t>(step.add)];
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return OSequence::make(std::move(v));
}

bool contains(const TreeFamily& family, const OSequence& h) {
  switch (family.kind()) {
    case TreeKind::Full:
      return h.multiplicity() <= *family.cap();
    case TreeKind::FixedLength:
      return h.length() == *family.length() && h.multiplicity() <= *family.cap();
    case TreeKind::FixedMultiplicity:
      return h.multiplicity() == *family.multiplicity();
    case TreeKind::FixedBoth:
      return h.multiplicity() == *family.multiplicity() && h.length() == *family.length();
  }
  return false;
}

OSequence rootOf(const TreeFamily& family) {
  if (family.empty()) throw DomainError("empty family: " + family.describe());
  switch (family.kind()) {
    case TreeKind::Full:
      return OSequence::ones(1);
    case TreeKind::FixedLength:
      return OSequence::ones(*family.length());
    case TreeKind::FixedMultiplicity: {
      const Int d = *family.multiplicity();
      return d == 1 ? OSequence::ones(1) : OSequence({1, d - 1});
    }
    case TreeKind::FixedBoth: {
      const Int d = *family.multiplicity();
      const Int s = *family.length();
      if (d == s) return OSequence::ones(s);
      std::vector<Int> v(static_cast<std::size_t>(s), 1);
      v[1] = d - s + 1;
      return OSequence(std::move(v));
    }
  }
  throw std::logic_error("unknown tree kind");
}

namespace {

// Largest index i >= from with h_i > 1, or 0 when there is none.
Int lastAbove1(const OSequence& h, Int from) {
  for (Int i = h.length() - 1; i >= from; --i)
    if (h.at(i) > 1) return i;
  return 0;
}

void pushIfValid(std::vector<OSequence>& out, const OSequence& h, const EdgeStep& step, Int cap) {
  if (auto c = applyStep(h, step); c && c->multiplicity() <= cap) out.push_back(std::move(*c));
}

void requireMember(const TreeFamily& family, const OSequence& h) {
  if (family.empty() || !contains(family, h))
    throw DomainError(h.str() + " is not a vertex of the " + family.describe());
}

}  // namespace

namespace detail {

std::vector<OSequence> childrenOf(const OSequence& h, const TreeFamily& family) {
  std::vector<OSequence> out;
  const Int s = h.length();
  switch (family.kind()) {
    case TreeKind::Full: {
      const Int cap = *family.cap();
      if (s >= 2) pushIfValid(out, h, {s - 1, std::nullopt}, cap);
      pushIfValid(out, h, {s, std::nullopt}, cap);
      break;
    }
    case TreeKind::FixedLength: {
      const Int cap = *family.cap();
      const Int k = std::max<Int>(1, lastAbove1(h, 1));
      for (Int j = k; j <= s - 1; ++j) pushIfValid(out, h, {j, std::nullopt}, cap);
      break;
    }
    case TreeKind::FixedMultiplicity: {
      if (s < 2 || h.at(1) < 2) break;
      const Int d = *family.multiplicity();
      if (s >= 3) pushIfValid(out, h, {s - 1, 1}, d);
      pushIfValid(out, h, {s, 1}, d);
      break;
    }
    case TreeKind::FixedBoth: {
      if (s < 3 || h.at(1) < 2) break;
      const Int d = *family.multiplicity();
      const Int k = std::max<Int>(2, lastAbove1(h, 2));
      for (Int j = k; j <= s - 1; ++j) pushIfValid(out, h, {j, 1}, d);
      break;
    }
  }
  return out;
}

}  // namespace detail

std::vector<OSequence> children(const OSequence& h, const TreeFamily& family) {
  requireMember(family, h);
  return detail::childrenOf(h, family);
}

std::optional<OSequence> parent(const OSequence& h, const TreeFamily& family) {
  requireMember(family, h);
  const Int s = h.length();
  std::optional<OSequence> p;
  switch (family.kind()) {
    case TreeKind::Full: {
      if (s == 1) return std::nullopt;
      std::vector<Int> v(h.entries().begin(), h.entries().end());
      if (--v.back() == 0) v.pop_back();
      p = OSequence::make(std::move(v));
      break;
    }
    case TreeKind::FixedLength: {
      const Int k = lastAbove1(h, 1);
      if (k == 0) return std::nullopt;
      std::vector<Int> v(h.entries().begin(), h.entries().end());
      --v[static_cast<std::size_t>(k)];
      p = OSequence::make(std::move(v));
      break;
    }
    case TreeKind::FixedMultiplicity: {
      if (s <= 2) return std::nullopt;
      std::vector<Int> v(h.entries().begin(), h.entries().end());
      ++v[1];
      if (--v.back() == 0) v.pop_back();
      p = OSequence::make(std::move(v));
      break;
    }
    case TreeKind::FixedBoth: {
      const Int k = lastAbove1(h, 2);
      if (k == 0) return std::nullopt;
      std::vector<Int> v(h.entries().begin(), h.entries().end());
      --v[static_cast<std::size_t>(k)];
      ++v[1];
      p = OSequence::make(std::move(v));
      break;
    }
  }
  if (!p || !contains(family, *p)) throw std::logic_error("parent map left the family at " + h.str());
  return p;
}

namespace {

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  void charge() {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw ResourceError("vertex budget of " + std::to_string(budget_) + " exceeded");
  }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
};

template <typename Visitor>
void preorder(const OSequence& start, const TreeFamily& family, BudgetCounter& budget, Visitor&& visit) {
  std::vector<OSequence> stack{start};
  while (!stack.empty()) {
    OSequence h = std::move(stack.back());
    stack.pop_back();
    budget.charge();
    auto kids = detail::childrenOf(h, family);
    visit(h);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
  }
}

}  // namespace

void visitAll(const TreeFamily& family, const std::function<void(const OSequence&)>& visitor,
              std::uint64_t budget) {
  BudgetCounter counter(budget);
  preorder(rootOf(family), family, counter, visitor);
}

std::vector<OSequence> enumerateAll(const TreeFamily& family, const EnumerateOptions& options) {
  BudgetCounter counter(options.budget);
  const OSequence root = rootOf(family);
  std::vector<OSequence> out;
  if (options.workers <= 1) {
    preorder(root, family, counter, [&](const OSequence& h) { out.push_back(h); });
    return out;
  }

  counter.charge();
  out.push_back(root);
  const auto top = detail::childrenOf(root, family);
  std::vector<std::vector<OSequence>> parts(top.size());
  std::vector<std::exception_ptr> errors(options.workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < options.workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < top.size(); i += options.workers)
            preorder(top[i], family, counter, [&](const OSequence& h) { parts[i].push_back(h); });
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

TreeExport exportTree(const TreeFamily& family, std::uint64_t budget) {
  BudgetCounter counter(budget);
  TreeExport tree{rootOf(family), {}};
  std::vector<OSequence> stack{tree.root};
  while (!stack.empty()) {
    OSequence h = std::move(stack.back());
    stack.pop_back();
    counter.charge();
    auto kids = detail::childrenOf(h, family);
    for (const auto& c : kids) tree.edges.emplace_back(h, c);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
  }
  return tree;
}

std::string toDot(const TreeExport& tree) {
  std::ostringstream os;
  os << "digraph osequences {\n";
  os << "  \"" << tree.root.str() << "\";\n";
  for (const auto& [from, to] : tree.edges) os << "  \"" << from.str() << "\" -> \"" << to.str() << "\";\n";
  os << "}\n";
  return os.str();
}

namespace {

// Vertices of G_d with the one-unit-forward moves as edges, plus a cache of
// reachability sets per source vertex.
struct Poset {
  std::vector<OSequence> vertices;
  std::unordered_map<OSequence, std::size_t> index;
  std::vector<std::vector<std::size_t>> up;
  std::map<std::size_t, std::vector<bool>> reach;
};

std::mutex posetMutex;
std::map<Int, Poset> posets;

Poset& posetFor(Int d) {
  auto [it, fresh] = posets.try_emplace(d);
  Poset& p = it->second;
  if (!fresh) return p;
  p.vertices = enumerateAll(TreeFamily::fixedMultiplicity(d));
  for (std::size_t i = 0; i < p.vertices.size(); ++i) p.index.emplace(p.vertices[i], i);
  p.up.resize(p.vertices.size());
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& h = p.vertices[v];
    for (Int i = 1; i < h.length(); ++i)
      for (Int j = i + 1; j <= h.length(); ++j)
        if (auto moved = applyStep(h, {j, i})) p.up[v].push_back(p.index.at(*moved));
  }
  return p;
}

}  // namespace

bool precedes(const OSequence& lower, const OSequence& upper) {
  const Int d = lower.multiplicity();
  if (upper.multiplicity() != d) throw DomainError("precedes: multiplicities differ");
  if (d > kMaxPrecedesMultiplicity)
    throw DomainError("precedes: multiplicity above " + std::to_string(kMaxPrecedesMultiplicity) + " is refused");
  if (lower == upper) return false;

  std::lock_guard lock(posetMutex);
  Poset& p = posetFor(d);
  const std::size_t from = p.index.at(lower);
  auto [it, fresh] = p.reach.try_emplace(from);
  if (fresh) {
    std::vector<bool> seen(p.vertices.size(), false);
    std::vector<std::size_t> queue{from};
    seen[from] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto next : p.up[queue[q]])
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
    seen[from] = false;
    it->second = std::move(seen);
  }
  return it->second[p.index.at(upper)];
}

std::strong_ordering totalCompare(const OSequence& a, const OSequence& b) {
  if (a.length() != b.length() || a.multiplicity() != b.multiplicity())
    throw DomainError("totalCompare: sequences must share length and multiplicity");
  for (Int j = a.length() - 1; j >= 1; --j)
    if (a.at(j) != b.at(j)) return a.at(j) <=> b.at(j);
  return std::strong_ordering::equal;
}

}  // namespace acm
