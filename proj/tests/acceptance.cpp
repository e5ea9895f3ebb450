// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--expect-fail LIST]
// Exit status is 0 when the failing criteria are exactly LIST (default: none).

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "acm/cli.hpp"
#include "acm/errors.hpp"
#include "acm/genus_search.hpp"
#include "acm/oseq_graph.hpp"
#include "acm/ranges.hpp"
#include "acm/regularity.hpp"
#include "oracle.hpp"

using namespace acm;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string range(const GenusRange& r) {
  return "[" + std::to_string(r.minGenus) + "," + std::to_string(r.maxGenus) + "]";
}

void mTable(Verdict& v) {
  const std::vector<Int> expected{0,   0,   1,   1,   3,   4,   4,   7,   11,  13,  18,  19,  19,  25,  32,
                                  40,  43,  52,  62,  73,  85,  89,  102, 116, 118, 133, 149, 166, 184, 203,
                                  208, 228, 229, 229, 250, 272, 295, 319, 344, 370, 376, 403, 431, 460, 490};
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"mseq", "45"}, out, err);
  const double secs = secondsSince(start);
  std::ostringstream want;
  for (std::size_t d = 1; d <= expected.size(); ++d) want << d << ' ' << expected[d - 1] << "\n";
  v.require(code == 0 && out.str() == want.str(), "mseq 45 output differs");
  v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  v.detail << " mseq 45 in " << secs << " s";
}

void tableCounts(Verdict& v) {
  struct Row {
    Int d, certain, gaps, searched, total;
  };
  for (const auto& row : {Row{25, 176, 88, 13, 187}, Row{50, 835, 289, 53, 870}}) {
    const auto start = Clock::now();
    const auto c = acmGenera(row.d);
    const double secs = secondsSince(start);
    const auto st = c.stats();
    v.detail << " d=" << row.d << ": " << st.certainGenera << "/" << st.certainGaps << "/" << st.searched << "/"
             << c.genera.count() << " in " << secs << " s;";
    v.require(st == ClassificationStats{row.certain, row.gaps, row.searched} && c.genera.count() == row.total,
              "counts differ at d=" + std::to_string(row.d));
    v.require(secs < 10.0, "too slow at d=" + std::to_string(row.d));
  }
}

void oracleEquivalence(Verdict& v) {
  const auto start = Clock::now();
  for (Int d = 1; d <= 30; ++d)
    v.require(acmGenera(d).genera == bruteForceGenera(d), "mismatch at d=" + std::to_string(d));
  const double secs = secondsSince(start);
  v.require(secs < 120.0, "took " + std::to_string(secs) + " s");
  v.detail << " d=1..30 in " << secs << " s";
}

void namedGaps(Verdict& v) {
  std::set<Int> beyondRanges;
  for (const auto& c : acmGenera(12).gaps)
    if (c.rule != "separated-ranges" && c.rule != "outside-ranges") beyondRanges.insert(c.value);
  v.require(beyondRanges == std::set<Int>{26}, "d=12 gaps beyond the range rules are not {26}");

  const auto d15 = acmGenera(15);
  v.require(d15.genera.contains(25), "25 is a gap for d=15");
  const auto w = genusSearch(25, TreeFamily::fixedBoth(15, 6));
  v.require(w && w->length() == 6 && genus(*w) == 25 && w->multiplicity() == 15, "no length-6 witness for 25");
  if (w) v.detail << " d=15 g=25 witness " << *w << ";";

  const auto gaps = acmGenera(28).gapValues();
  for (const Int x : {188, 207, 208, 209, 222, 223, 224, 239, 240, 258})
    v.require(std::binary_search(gaps.begin(), gaps.end(), x), std::to_string(x) + " not a gap at d=28");
  v.require(!gaps.empty() && gaps.front() == 188, "min gap at d=28 is not 188");
  if (!gaps.empty()) v.detail << " d=28 min gap " << gaps.front();
}

void rangeExtremes(Verdict& v) {
  const auto r74 = genusRange(7, 4);
  const auto r104 = genusRange(10, 4);
  const auto r128 = genusRange(12, 8);
  v.detail << " R_7^4=" << range(r74) << " R_10^4=" << range(r104) << " R_12^8=" << range(r128) << ";";
  v.require(r74.minGenus == 3 && r74.maxGenus == 6, "R_7^4 != [3,6]");
  v.require(r104.minGenus == 3 && r104.maxGenus == 11, "R_10^4 != [3,11]");
  v.require(r128.minGenus == 21 && r128.maxGenus == 28,
            "R_12^8 != [21,28]; largest genus of multiplicity 12, length 8 by exhaustive enumeration is " +
                std::to_string([] {
                  Int best = -1;
                  for (const auto& h : oracle::allOfMultiplicity(12))
                    if (h.size() == 8) best = std::max(best, oracle::genusOf(h));
                  return best;
                }()));
  bool closed = maxOSeq(1, 1) == closedFormMaxOSeq(1, 1);
  for (Int d = 2; d <= 60; ++d)
    for (Int s = std::max<Int>(2, d / 2 + 1); s <= d; ++s)
      closed = closed && maxOSeq(d, s) == closedFormMaxOSeq(d, s) && maxGenus(d, s) == closedFormMaxGenus(d, s);
  v.require(closed, "closed form differs from the iterative maximum");
}

void regularity(Verdict& v) {
  const auto a = minAcmRegularity(15, 32);
  v.detail << " (15,32) -> " << a.minRegularity << " via " << a.witness << ";";
  v.require(a.minRegularity == 8 && a.witness.length() == 8 && genus(a.witness) == 32 &&
                a.witness.multiplicity() == 15,
            "(15,32) answer wrong");
  Int checked = 0;
  for (Int d = 1; d <= 20; ++d) {
    const auto expected = oracle::minLengthByGenus(d);
    for (Int g = 0; g <= choose2(d - 1); ++g) {
      ++checked;
      const auto it = expected.find(g);
      try {
        const auto r = minAcmRegularity(d, g);
        v.require(it != expected.end() && r.minRegularity == it->second && r.witness.length() == r.minRegularity &&
                      genus(r.witness) == g,
                  "wrong answer at (" + std::to_string(d) + "," + std::to_string(g) + ")");
      } catch (const NotAcmGenusError&) {
        v.require(it == expected.end(), "spurious error at (" + std::to_string(d) + "," + std::to_string(g) + ")");
      }
    }
  }
  v.detail << " " << checked << " pairs with d<=20";
}

void genusSpots(Verdict& v) {
  v.require(genus(OSequence({1, 2, 3, 1})) == 5, "genus(1,2,3,1)");
  v.require(genus(OSequence({1, 6, 4, 2, 1})) == 11, "genus(1,6,4,2,1)");
  v.require(genus(OSequence({1, 4, 7, 1, 1})) == 12, "genus(1,4,7,1,1)");
  v.require(genus(OSequence({1, 4, 6, 2, 1})) == 13, "genus(1,4,6,2,1)");
}

void performance(Verdict& v) {
  auto start = Clock::now();
  const auto c = acmGenera(100);
  const double secs = secondsSince(start);
  v.detail << " acmGenera(100) in " << secs << " s;";
  v.require(secs < 60.0, "acmGenera(100) too slow");

  start = Clock::now();
  bool exceeded = false;
  try {
    bruteForceGenera(75);
  } catch (const ResourceError&) {
    exceeded = true;
  }
  v.detail << " bruteForceGenera(75) " << (exceeded ? "exceeded its budget" : "finished") << " after "
           << secondsSince(start) << " s;";
  v.require(exceeded, "bruteForceGenera(75) did not exceed the budget");

  for (const char* d : {"100", "150"}) {
    std::ostringstream out, err;
    cli::run({"bench", d, "--budget", "1000"}, out, err);
    const auto text = out.str();
    const auto pos = text.find("step3_share=");
    const double share = pos == std::string::npos ? 0.0 : std::stod(text.substr(pos + 12));
    v.detail << " step3 share at d=" << d << ": " << share << ";";
    v.require(share >= 0.9, std::string("step3 share below 0.9 at d=") + d);
  }
}

void structure(Verdict& v) {
  bool inverse = true;
  bool spanning = true;
  bool monotone = true;
  for (Int d = 1; d <= 15; ++d) {
    std::vector<TreeFamily> families{TreeFamily::fixedMultiplicity(d)};
    for (Int s = 1; s <= d; ++s)
      if (!TreeFamily::fixedBoth(d, s).empty()) families.push_back(TreeFamily::fixedBoth(d, s));
    for (const auto& f : families) {
      visitAll(f, [&](const OSequence& h) {
        for (const auto& c : children(h, f)) {
          inverse = inverse && parent(c, f) == h;
          monotone = monotone && genus(c) >= genus(h);
          if (f.kind() == TreeKind::FixedBoth || h.length() >= 3) monotone = monotone && genus(c) > genus(h);
        }
      });
    }
    const auto listed = enumerateAll(TreeFamily::fixedMultiplicity(d));
    const auto expected = oracle::asSequences(oracle::allOfMultiplicity(d));
    spanning = spanning && std::set<OSequence>(listed.begin(), listed.end()) ==
                               std::set<OSequence>(expected.begin(), expected.end()) &&
               listed.size() == expected.size();
    for (Int s = 2; s <= d; ++s) {
      const auto part = enumerateAll(TreeFamily::fixedBoth(d, s));
      std::set<OSequence> want;
      for (const auto& h : expected)
        if (h.length() == s) want.insert(h);
      spanning = spanning && std::set<OSequence>(part.begin(), part.end()) == want;
    }
  }
  for (const auto& f : {TreeFamily::full(10), TreeFamily::fixedLength(4, 12)})
    visitAll(f, [&](const OSequence& h) {
      for (const auto& c : children(h, f)) inverse = inverse && parent(c, f) == h;
    });
  v.require(inverse, "parent(child(h)) != h");
  v.require(spanning, "tree vertex sets differ from brute-force generation");
  v.require(monotone, "genus decreases along an edge");

  std::ostringstream counts;
  for (Int d = 3; d <= 20; ++d) {
    const auto n = static_cast<Int>(enumerateAll(TreeFamily::fixedMultiplicity(d)).size());
    if (!(n < (Int{1} << (d - 2)))) {
      counts << " |G_" << d << "|=" << n << " is not < 2^" << (d - 2);
      v.require(false, "count bound" + counts.str());
    }
  }

  bool deterministic = true;
  for (const char* d : {"20", "55", "90"}) {
    std::ostringstream a, b, err;
    cli::run({"genera", d, "--format", "json"}, a, err);
    cli::run({"genera", d, "--format", "json", "--parallel", "8"}, b, err);
    deterministic = deterministic && a.str() == b.str() && !a.str().empty();
  }
  v.require(deterministic, "--parallel output differs");
}

std::set<int> parseList(const std::string& text) {
  std::set<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expectedFailures;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") expectedFailures = parseList(argv[i + 1]);

  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"continuity table m_1..m_45", mTable},
      {"degree statistics at d=25 and d=50", tableCounts},
      {"classification equals brute force for d<=30", oracleEquivalence},
      {"named gaps for d=12, 15, 28", namedGaps},
      {"range extremes and closed form", rangeExtremes},
      {"minimal regularity", regularity},
      {"genus spot checks", genusSpots},
      {"performance profile", performance},
      {"structural invariants", structure},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    const int id = static_cast<int>(i) + 1;
    if (!v.pass) failed.insert(id);
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ":" << v.detail.str()
              << std::endl;
  }
  return failed == expectedFailures ? 0 : 1;
}
