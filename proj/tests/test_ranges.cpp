#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "acm/errors.hpp"
#include "acm/oseq_graph.hpp"
#include "acm/ranges.hpp"
#include "oracle.hpp"

using namespace acm;

namespace {

// (min, max) genus per length over all O-sequences of multiplicity d.
std::map<Int, std::pair<Int, Int>> oracleRanges(Int d) {
  std::map<Int, std::pair<Int, Int>> out;
  for (const auto& h : oracle::allOfMultiplicity(d)) {
    const Int s = static_cast<Int>(h.size());
    const Int g = oracle::genusOf(h);
    auto [it, fresh] = out.emplace(s, std::pair{g, g});
    it->second.first = std::min(it->second.first, g);
    it->second.second = std::max(it->second.second, g);
  }
  return out;
}

std::set<Int> oracleGeneraOfLength(Int d, Int s) {
  std::set<Int> out;
  for (const auto& h : oracle::allOfMultiplicity(d))
    if (static_cast<Int>(h.size()) == s) out.insert(oracle::genusOf(h));
  return out;
}

}  // namespace

TEST_CASE("range endpoints") {
  CHECK(minGenus(1) == 0);
  CHECK(minGenus(2) == 0);
  CHECK(minGenus(8) == 21);
  CHECK(minOSeq(7, 4) == OSequence({1, 4, 1, 1}));
  CHECK(minOSeq(4, 4) == OSequence::ones(4));
  CHECK(maxOSeq(7, 3) == OSequence({1, 3, 3}));

  const auto r74 = genusRange(7, 4);
  CHECK(r74.minGenus == 3);
  CHECK(r74.maxGenus == 6);
  const auto r104 = genusRange(10, 4);
  CHECK(r104.minGenus == 3);
  CHECK(r104.maxGenus == 11);
  CHECK(r104.maxWitness == OSequence({1, 2, 3, 4}));

  const auto r128 = genusRange(12, 8);
  CHECK(r128.minGenus == 21);
  CHECK(r128.maxGenus == 27);
  CHECK(r128.maxWitness == OSequence({1, 2, 2, 2, 2, 1, 1, 1}));
  CHECK(oracleRanges(12).at(8) == std::pair<Int, Int>{21, 27});

  CHECK_THROWS_AS(maxOSeq(3, 4), DomainError);
  CHECK_THROWS_AS(minOSeq(5, 1), DomainError);
  CHECK(maxOSeq(1, 1) == OSequence::ones(1));
  CHECK_THROWS_AS(closedFormMaxOSeq(10, 4), std::invalid_argument);
}

TEST_CASE("closed form equals the iterative maximum") {
  for (Int d = 4; d <= 60; ++d)
    for (Int s = d / 2 + 1; s <= d; ++s) {
      CAPTURE(d);
      CAPTURE(s);
      CHECK(maxOSeq(d, s) == closedFormMaxOSeq(d, s));
      CHECK(maxGenus(d, s) == closedFormMaxGenus(d, s));
      CHECK(closedFormMaxGenus(d, s) == choose2(s - 1) + choose2(d - s));
    }
}

TEST_CASE("ranges agree with brute force") {
  for (Int d = 2; d <= 15; ++d) {
    const auto expected = oracleRanges(d);
    for (Int s = 2; s <= d; ++s) {
      CAPTURE(d);
      CAPTURE(s);
      const auto r = genusRange(d, s);
      CHECK(std::pair{r.minGenus, r.maxGenus} == expected.at(s));
      CHECK(genus(r.minWitness) == r.minGenus);
      CHECK(genus(r.maxWitness) == r.maxGenus);
      const auto all = enumerateAll(TreeFamily::fixedBoth(d, s));
      const auto top = std::max_element(all.begin(), all.end(), [](const OSequence& a, const OSequence& b) {
        return totalCompare(a, b) == std::strong_ordering::less;
      });
      CHECK(*top == r.maxWitness);
    }
  }
}

TEST_CASE("range table") {
  const RangeTable t(12);
  CHECK(t.minLength() == 2);
  CHECK(t.all().size() == 11);
  CHECK(t.at(8) == genusRange(12, 8));
  CHECK(t.covers(26));
  CHECK(t.covers(20));
  CHECK_FALSE(t.covers(32));
  CHECK_THROWS_AS(t.at(13), DomainError);

  const RangeTable one(1);
  CHECK(one.all().size() == 1);
  CHECK(one.at(1).maxGenus == 0);
}

TEST_CASE("separated ranges") {
  CHECK(separatedAfter(2).empty());
  CHECK(separatedAfter(7) == std::vector<Int>{5, 6});
  for (Int d = 3; d <= 60; ++d)
    for (Int s = 2; s <= d - 1; ++s)
      if (isSeparated(d, s)) CHECK(maxGenus(d, s) + 1 < minGenus(s + 1));
}

TEST_CASE("top-of-range holes") {
  CHECK(holes(15, 11).values == std::vector<Int>{50});
  CHECK(holes(28, 22).values == std::vector<Int>{222, 223, 224});
  CHECK(holes(28, 24).values == std::vector<Int>{258});
  CHECK(holes(12, 4).outsideHypotheses);
  CHECK(holes(12, 4).values.empty());
  CHECK_FALSE(holes(12, 8).outsideHypotheses);

  for (Int d = 12; d <= 18; ++d)
    for (Int s = 2; s <= d; ++s) {
      const auto list = holes(d, s);
      if (list.outsideHypotheses) continue;
      const auto attained = oracleGeneraOfLength(d, s);
      for (const Int v : list.values) {
        CAPTURE(v);
        CHECK_FALSE(attained.contains(v));
        CHECK(genusRange(d, s).contains(v));
      }
    }
}

TEST_CASE("certified gaps") {
  std::vector<Int> d7;
  for (const auto& c : certifiedGaps(7)) d7.push_back(c.value);
  CHECK(d7 == std::vector<Int>{8, 9, 11, 12, 13, 14});
  CHECK(certifiedGaps(2).empty());

  for (Int d = 3; d <= 20; ++d) {
    CAPTURE(d);
    const auto genera = oracle::generaOf(d);
    const auto gaps = certifiedGaps(d);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      CHECK_FALSE(genera.contains(gaps[i].value));
      CHECK(verifyCertificate(d, gaps[i]));
      if (i) CHECK(gaps[i - 1].value < gaps[i].value);
    }
  }

  std::vector<Int> fromRanges;
  for (const auto& c : certifiedGaps(12))
    if (c.rule != "top-hole") fromRanges.push_back(c.value);
  std::set<Int> missing;
  for (Int v = 0; v <= choose2(11); ++v) missing.insert(v);
  for (const Int g : oracle::generaOf(12)) missing.erase(g);
  for (const Int v : fromRanges) missing.erase(v);
  CHECK(missing == std::set<Int>{26});

  auto forged = certifiedGaps(12).front();
  forged.value += 100;
  CHECK_FALSE(verifyCertificate(12, forged));
  CHECK_FALSE(verifyCertificate(12, GapCertificate{26, GapReason::Searched, 8, 0, "post-loop"}));
}
