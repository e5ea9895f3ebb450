#include "acm/ranges.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "acm/errors.hpp"

namespace acm {

namespace {

void requireNonEmpty(Int d, Int s) {
  if (d < 1 || s < 1) throw std::invalid_argument("range parameters must be positive");
  if (d < s || (s == 1 && d > 1))
    throw DomainError("empty range: no O-sequence of multiplicity " + std::to_string(d) + " and length " +
                      std::to_string(s));
}

bool inClosedFormRegime(Int d, Int s) { return d / 2 + 1 <= s && s <= d; }

// Where the top-of-range hole formula applies.
bool holeHypotheses(Int d, Int s) { return 7 <= d / 2 + 1 && d / 2 + 1 <= s && s <= d - 4; }

}  // namespace

Int minGenus(Int s) {
  if (s < 1) throw std::invalid_argument("minGenus: s must be positive");
  return choose2(s - 1);
}

OSequence minOSeq(Int d, Int s) {
  requireNonEmpty(d, s);
  std::vector<Int> v(static_cast<std::size_t>(s), 1);
  if (d > s) v[1] = d - s + 1;
  return OSequence(std::move(v));
}

OSequence maxOSeq(Int d, Int s) {
  requireNonEmpty(d, s);
  std::vector<Int> h(static_cast<std::size_t>(s), 1);
  if (s == 1) return OSequence(std::move(h));
  // Entries above the last raised index plus one are saturated, so each
  // scan starts there instead of at the top.
  Int start = s - 1;
  for (Int m = s + 1; m <= d; ++m) {
    Int i = std::min(start, s - 1);
    while (i >= 2 && h[static_cast<std::size_t>(i)] >= macaulayBound(h[static_cast<std::size_t>(i - 1)], i - 1)) --i;
    ++h[static_cast<std::size_t>(i)];
    start = i + 1;
  }
  return OSequence(std::move(h));
}

Int maxGenus(Int d, Int s) { return genus(maxOSeq(d, s)); }

OSequence closedFormMaxOSeq(Int d, Int s) {
  if (!inClosedFormRegime(d, s)) throw std::invalid_argument("closed form needs floor(d/2)+1 <= s <= d");
  std::vector<Int> v{1};
  v.insert(v.end(), static_cast<std::size_t>(d - s), 2);
  v.insert(v.end(), static_cast<std::size_t>(2 * s - d - 1), 1);
  return OSequence(std::move(v));
}

Int closedFormMaxGenus(Int d, Int s) {
  if (!inClosedFormRegime(d, s)) throw std::invalid_argument("closed form needs floor(d/2)+1 <= s <= d");
  return choose2(s - 1) + choose2(d - s);
}

GenusRange genusRange(Int d, Int s) {
  GenusRange r{d, s, minGenus(s), 0, minOSeq(d, s), maxOSeq(d, s)};
  r.maxGenus = genus(r.maxWitness);
  return r;
}

RangeTable::RangeTable(Int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("RangeTable: d must be positive");
  for (Int s = minLength(); s <= maxLength(); ++s) ranges_.push_back(genusRange(d, s));
}

const GenusRange& RangeTable::at(Int s) const {
  if (s < minLength() || s > maxLength()) throw DomainError("no (" + std::to_string(d_) + "," + std::to_string(s) + ")-range");
  return ranges_[static_cast<std::size_t>(s - minLength())];
}

bool RangeTable::covers(Int g) const {
  return std::any_of(ranges_.begin(), ranges_.end(), [g](const GenusRange& r) { return r.contains(g); });
}

bool isSeparated(Int d, Int s) {
  if (d <= 2 || s < 2 || s > d - 1) return false;
  // (2d+1-sqrt(8d-15))/2 < s  <=>  sqrt(8d-15) > 2d+1-2s, and 2d+1-2s >= 3 here.
  const Int lhs = 2 * d + 1 - 2 * s;
  return checkedMul(lhs, lhs) < 8 * d - 15;
}

std::vector<Int> separatedAfter(Int d) {
  std::vector<Int> out;
  for (Int s = 2; s <= d - 1; ++s)
    if (isSeparated(d, s)) out.push_back(s);
  return out;
}

HoleList holes(Int d, Int s) {
  HoleList list;
  if (!holeHypotheses(d, s)) {
    list.outsideHypotheses = true;
    return list;
  }
  const Int top = closedFormMaxGenus(d, s);
  for (Int i = d - s - 3; i >= 1; --i) list.values.push_back(top - i);
  return list;
}

std::string toString(GapReason reason) {
  switch (reason) {
    case GapReason::BetweenRanges: return "between-ranges";
    case GapReason::HoleAlwaysGap: return "hole-always-gap";
    case GapReason::Searched: return "searched";
  }
  return "unknown";
}

std::vector<GapCertificate> certifiedGaps(Int d) {
  if (d <= 2) return {};
  return certifiedGaps(RangeTable(d));
}

std::vector<GapCertificate> certifiedGaps(const RangeTable& table) {
  const Int d = table.degree();
  if (d <= 2) return {};
  const Int top = choose2(d - 1);
  std::map<Int, GapCertificate> found;

  for (const Int s : separatedAfter(d))
    for (Int v = table.at(s).maxGenus + 1; v < minGenus(s + 1); ++v)
      found.try_emplace(v, GapCertificate{v, GapReason::BetweenRanges, s, 0, "separated-ranges"});

  std::vector<Int> cover(static_cast<std::size_t>(top + 2), 0);
  for (const auto& r : table.all()) {
    ++cover[static_cast<std::size_t>(r.minGenus)];
    --cover[static_cast<std::size_t>(r.maxGenus + 1)];
  }
  Int depth = 0;
  Int below = table.minLength();  // largest s with minGenus(s) <= v
  for (Int v = 0; v <= top; ++v) {
    depth += cover[static_cast<std::size_t>(v)];
    while (below < d && minGenus(below + 1) <= v) ++below;
    if (depth == 0) found.try_emplace(v, GapCertificate{v, GapReason::BetweenRanges, below, 0, "outside-ranges"});
  }

  for (Int s = table.minLength(); s <= d; ++s) {
    if (!holeHypotheses(d, s)) continue;
    const Int g = closedFormMaxGenus(d, s);
    for (Int i = 1; i <= d - s - 3; ++i)
      if (s - 1 - choose2(d - s) + i > 0)
        found.try_emplace(g - i, GapCertificate{g - i, GapReason::HoleAlwaysGap, s, i, "top-hole"});
  }

  std::vector<GapCertificate> out;
  out.reserve(found.size());
  for (auto& [v, c] : found) out.push_back(std::move(c));
  return out;
}

bool verifyCertificate(Int d, const GapCertificate& c) {
  if (d <= 2 || c.value < 0 || c.value > choose2(d - 1)) return false;
  switch (c.reason) {
    case GapReason::BetweenRanges: {
      const Int s = c.length;
      if (s < 2 || s > d - 1) return false;
      const Int upper = inClosedFormRegime(d, s) ? closedFormMaxGenus(d, s) : maxGenus(d, s);
      if (!(upper < c.value && c.value < minGenus(s + 1))) return false;
      if (c.rule == "separated-ranges") return isSeparated(d, s);
      for (Int t = 2; t <= d; ++t) {
        const Int hi = inClosedFormRegime(d, t) ? closedFormMaxGenus(d, t) : maxGenus(d, t);
        if (minGenus(t) <= c.value && c.value <= hi) return false;
      }
      return true;
    }
    case GapReason::HoleAlwaysGap: {
      const Int s = c.length;
      const Int i = c.offset;
      return holeHypotheses(d, s) && 1 <= i && i <= d - s - 3 && c.value == closedFormMaxGenus(d, s) - i &&
             s - 1 - choose2(d - s) + i > 0;
    }
    case GapReason::Searched:
      return false;
  }
  return false;
}

}  // namespace acm
