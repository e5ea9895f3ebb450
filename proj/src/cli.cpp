#include "acm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "acm/continuity.hpp"
#include "acm/errors.hpp"
#include "acm/genus_search.hpp"
#include "acm/ranges.hpp"
#include "acm/regularity.hpp"
#include "acm/serialize.hpp"

namespace acm::cli {

namespace {

using nlohmann::json;

std::string joined(const std::vector<Int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::string paren(const OSequence& h) { return "(" + h.str() + ")"; }

void printClassificationText(std::ostream& out, const DegreeClassification& c) {
  const auto st = c.stats();
  out << "d=" << c.d << "\n";
  out << "genera: " << joined(c.genera.values(), " ") << "\n";
  out << "gaps: " << joined(c.gapValues(), " ") << "\n";
  out << "certain-genera=" << st.certainGenera << " certain-gaps=" << st.certainGaps << " searched=" << st.searched
      << " |G|=" << c.genera.count() << "\n";
}

void printClassificationCsv(std::ostream& out, const DegreeClassification& c) {
  out << "value,status,provenance,witness\n";
  for (Int g = 0; g <= c.genera.upper(); ++g) {
    out << g << ',' << (c.genera.contains(g) ? "genus" : "gap") << ',' << toString(c.provenance(g)) << ',';
    if (const auto it = c.witnesses.find(g); it != c.witnesses.end()) out << '"' << it->second.str() << '"';
    out << "\n";
  }
}

struct Options {
  Int d = 0;
  Int g = 0;
  Int dMax = 0;
  std::optional<Int> length;
  unsigned workers = 1;
  bool oracle = false;
  bool full = false;
  std::string cache;
  std::string format = "text";
  std::string exportAs;
  std::string hVector;
  std::optional<Int> tMax;
  std::uint64_t budget = kDefaultVisitBudget;
};

int cmdGenera(const Options& o, std::ostream& out, std::ostream& err) {
  ClassifyOptions options;
  options.workers = o.workers;
  std::optional<ContinuityCache> cache;
  if (!o.cache.empty()) {
    cache = ContinuityCache::load(o.cache);
    options.cache = &*cache;
  }
  const auto c = acmGenera(o.d, options);
  if (cache) cache->save(o.cache);

  std::optional<bool> agrees;
  if (o.oracle) agrees = bruteForceGenera(o.d) == c.genera;

  if (o.format == "json") {
    json j = c;
    if (agrees) j["oracle"] = *agrees ? "agree" : "mismatch";
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    printClassificationCsv(out, c);
  } else {
    printClassificationText(out, c);
    if (agrees) out << "oracle=" << (*agrees ? "agree" : "mismatch") << "\n";
  }
  if (agrees && !*agrees) {
    err << "oracle mismatch at d=" << o.d << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmdGaps(const Options& o, std::ostream& out) {
  const auto c = acmGenera(o.d);
  if (o.format == "json") {
    out << json(c.gaps).dump() << "\n";
    return kOk;
  }
  for (const auto& cert : c.gaps) {
    out << cert.value << ' ' << toString(cert.reason) << " rule=" << cert.rule;
    if (cert.length != 0) out << " s=" << cert.length;
    if (cert.reason == GapReason::HoleAlwaysGap) out << " i=" << cert.offset;
    out << "\n";
  }
  return kOk;
}

int cmdSearch(const Options& o, std::ostream& out) {
  const auto family = o.length ? TreeFamily::fixedBoth(o.d, *o.length) : TreeFamily::fixedMultiplicity(o.d);
  const auto witness = genusSearch(o.g, family);
  out << (witness ? paren(*witness) : std::string("none")) << "\n";
  return kOk;
}

int cmdRanges(const Options& o, std::ostream& out) {
  const RangeTable table(o.d);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : table.all()) {
      json row = r;
      row["separated"] = isSeparated(o.d, r.s);
      rows.push_back(std::move(row));
    }
    out << rows.dump() << "\n";
    return kOk;
  }
  for (const auto& r : table.all())
    out << "s=" << r.s << " min=" << r.minGenus << " max=" << r.maxGenus << " minWitness=" << paren(r.minWitness)
        << " maxWitness=" << paren(r.maxWitness) << " separated=" << (isSeparated(o.d, r.s) ? "true" : "false")
        << "\n";
  return kOk;
}

int cmdMseq(const Options& o, std::ostream& out) {
  const auto table = mSequence(o.dMax);
  if (o.format == "json") {
    out << json(table).dump() << "\n";
    return kOk;
  }
  for (Int d = 1; d <= table.dMax(); ++d) out << d << ' ' << table.at(d) << "\n";
  return kOk;
}

int cmdMinReg(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const auto a = minAcmRegularity(o.d, o.g);
    if (o.format == "json")
      out << json(a).dump() << "\n";
    else
      out << "m_acm=" << a.minRegularity << " rho=" << a.postulationRegularity << " witness=" << paren(a.witness)
          << "\n";
    return kOk;
  } catch (const NotAcmGenusError& e) {
    err << e.reasonName() << "\n";
    return kDomain;
  }
}

int cmdEnumerate(const Options& o, std::ostream& out) {
  TreeFamily family = TreeFamily::fixedMultiplicity(o.d);
  if (o.full)
    family = o.length ? TreeFamily::fixedLength(*o.length, o.d) : TreeFamily::full(o.d);
  else if (o.length)
    family = TreeFamily::fixedBoth(o.d, *o.length);

  if (o.exportAs == "dot") {
    out << toDot(exportTree(family, o.budget));
  } else if (o.exportAs == "json") {
    out << json(exportTree(family, o.budget)).dump() << "\n";
  } else {
    visitAll(family, [&](const OSequence& h) { out << paren(h) << "\n"; }, o.budget);
  }
  return kOk;
}

int cmdHilbert(const Options& o, std::ostream& out) {
  const auto h = OSequence::parse(o.hVector);
  const auto data = hilbertData(h, o.tMax.value_or(std::max<Int>(h.length(), 1)));
  if (o.format == "json") {
    out << json(data).dump() << "\n";
    return kOk;
  }
  out << "h=" << paren(h) << "\n";
  out << "H_Z=" << joined(data.zeroDimFunction, ",") << "\n";
  out << "H_C=" << joined(data.curveFunction, ",") << "\n";
  out << "P(t)=" << data.leading << "t" << (data.constant < 0 ? "" : "+") << data.constant << "\n";
  out << "rho=" << data.postulationRegularity() << " genus=" << genus(h) << "\n";
  return kOk;
}

int cmdBench(const Options& o, std::ostream& out) {
  ClassifyOptions options;
  options.workers = o.workers;
  acmGenera(o.d, options);  // warm-up, not reported

  StepTimings t;
  options.timings = &t;
  acmGenera(o.d, options);
  const double total = t.totalMs();
  out << std::fixed << std::setprecision(3);
  out << "d=" << o.d << "\n";
  out << "step1_ms=" << t.step1Ms << "\n";
  out << "step2_ms=" << t.step2Ms << "\n";
  out << "step3_ms=" << t.step3Ms << "\n";
  out << "total_ms=" << total << "\n";
  out << "step3_share=" << (total > 0 ? t.step3Ms / total : 0.0) << "\n";

  std::uint64_t visited = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    visitAll(TreeFamily::fixedMultiplicity(o.d), [&](const OSequence&) { ++visited; }, o.budget);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << "full_visit_ms=" << ms << " vertices=" << visited << "\n";
  } catch (const ResourceError&) {
    out << "full_visit=budget-exceeded budget=" << o.budget << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genera of arithmetically Cohen-Macaulay curves via O-sequences", "acm"};
  app.require_subcommand(1);
  Options o;

  const auto positive = CLI::PositiveNumber;
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* genera = app.add_subcommand("genera", "Classify every value of [0, C(d-1,2)]");
  genera->add_option("d", o.d, "Degree")->required()->check(positive);
  genera->add_flag("--oracle", o.oracle, "Cross-check against brute-force generation");
  genera->add_option("--parallel", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  genera->add_option("--cache", o.cache, "Certain-genera cache file")->envname("ACM_CACHE");
  genera->add_option("--format", o.format)->check(formats);

  auto* gaps = app.add_subcommand("gaps", "Gaps with certificates");
  gaps->add_option("d", o.d)->required()->check(positive);
  gaps->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* search = app.add_subcommand("search", "Find an O-sequence of multiplicity d and genus g");
  search->add_option("d", o.d)->required()->check(positive);
  search->add_option("g", o.g)->required();
  search->add_option("--length", o.length, "Restrict to length s")->check(positive);

  auto* ranges = app.add_subcommand("ranges", "Genus range per length");
  ranges->add_option("d", o.d)->required()->check(positive);
  ranges->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* mseq = app.add_subcommand("mseq", "Continuity sequence m_1..m_dmax");
  mseq->add_option("dmax", o.dMax)->required()->check(positive);
  mseq->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* minReg = app.add_subcommand("min-reg", "Minimal regularity of an aCM curve of degree d and genus g");
  minReg->add_option("d", o.d)->required()->check(positive);
  minReg->add_option("g", o.g)->required();
  minReg->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "List or export a spanning tree of O-sequences");
  enumerate->add_option("d", o.d, "Multiplicity (cap for --full)")->required()->check(positive);
  enumerate->add_option("--length", o.length)->check(positive);
  enumerate->add_flag("--full", o.full, "All O-sequences of multiplicity at most d");
  enumerate->add_option("--export", o.exportAs)->check(CLI::IsMember({"dot", "json"}));
  enumerate->add_option("--budget", o.budget, "Vertex budget");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions of an h-vector");
  hilbert->add_option("hvector", o.hVector, "e.g. 1,2^3,1")->required();
  hilbert->add_option("--tmax", o.tMax)->check(CLI::NonNegativeNumber);
  hilbert->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* bench = app.add_subcommand("bench", "Per-step timings of the classification");
  bench->add_option("d", o.d)->required()->check(positive);
  bench->add_option("--parallel", o.workers)->check(CLI::Range(1u, 1024u));
  bench->add_option("--budget", o.budget, "Vertex budget for the full visit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (genera->parsed()) return cmdGenera(o, out, err);
    if (gaps->parsed()) return cmdGaps(o, out);
    if (search->parsed()) return cmdSearch(o, out);
    if (ranges->parsed()) return cmdRanges(o, out);
    if (mseq->parsed()) return cmdMseq(o, out);
    if (minReg->parsed()) return cmdMinReg(o, out, err);
    if (enumerate->parsed()) return cmdEnumerate(o, out);
    if (hilbert->parsed()) return cmdHilbert(o, out);
    if (bench->parsed()) return cmdBench(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace acm::cli
