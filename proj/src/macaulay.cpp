#include "acm/macaulay.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace acm {

Int BinomialExpansion::sum() const {
  Int total = 0;
  for (const auto& term : terms) total = checkedAdd(total, binomial(term.top, term.bottom));
  return total;
}

namespace {

// Largest k >= t with C(k, t) <= a, together with C(k, t). Requires a >= 1.
std::pair<Int, Int> greedyTop(Int a, Int t) {
  if (t == 1) return {a, a};
  Int k = t;
  Int c = 1;
  for (;;) {
    // C(k+1, t) = C(k, t) * (k+1) / (k+1-t)
    const Int next = checkedMul(c, k + 1) / (k + 1 - t);
    if (next > a) break;
    c = next;
    ++k;
  }
  return {k, c};
}

}  // namespace

BinomialExpansion expand(Int a, Int t) {
  if (a < 1 || t < 1) throw std::invalid_argument("expand: requires a >= 1 and t >= 1");
  BinomialExpansion e{a, t, {}};
  Int rest = a;
  for (Int i = t; rest > 0 && i >= 1; --i) {
    if (rest <= i) {
      // C(i, i) + C(i-1, i-1) + ... : the remainder is a run of ones.
      for (Int j = i; j > i - rest; --j) e.terms.push_back({j, j});
      rest = 0;
      break;
    }
    const auto [k, c] = greedyTop(rest, i);
    e.terms.push_back({k, i});
    rest -= c;
  }
  return e;
}

Int macaulayBound(Int a, Int t) {
  if (a < 0 || t < 1) throw std::invalid_argument("macaulayBound: requires a >= 0 and t >= 1");
  if (a == 0) return 0;
  if (a <= t) return a;
  if (t == 1) return choose2(checkedAdd(a, 1));
  Int bound = 0;
  for (const auto& term : expand(a, t).terms)
    bound = checkedAdd(bound, binomial(term.top + 1, term.bottom + 1));
  return bound;
}

bool isAdmissible(std::span<const Int> h) {
  if (h.empty() || h[0] != 1) return false;
  for (const Int v : h)
    if (v < 1) return false;
  for (std::size_t t = 1; t + 1 < h.size(); ++t)
    if (h[t + 1] > macaulayBound(h[t], static_cast<Int>(t))) return false;
  return true;
}

OSequence::OSequence(Trusted, std::vector<Int> entries) : h_(std::move(entries)) {
  for (const Int v : h_) multiplicity_ = checkedAdd(multiplicity_, v);
}

OSequence::OSequence(std::vector<Int> entries) {
  if (!isAdmissible(entries)) throw std::invalid_argument("not a finite O-sequence");
  *this = OSequence(Trusted{}, std::move(entries));
}

std::optional<OSequence> OSequence::make(std::vector<Int> entries) {
  if (!isAdmissible(entries)) return std::nullopt;
  return OSequence(Trusted{}, std::move(entries));
}

OSequence OSequence::ones(Int s) {
  if (s < 1) throw std::invalid_argument("ones: length must be positive");
  return OSequence(Trusted{}, std::vector<Int>(static_cast<std::size_t>(s), 1));
}

namespace {

Int parseNumber(std::string_view token, std::string_view whole) {
  Int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw std::invalid_argument("malformed O-sequence: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

OSequence OSequence::parse(std::string_view text) {
  std::string compact;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::string_view body = compact;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) throw std::invalid_argument("empty O-sequence");

  std::vector<Int> entries;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto caret = item.find('^');
    const Int value = parseNumber(item.substr(0, caret), text);
    const Int repeat = caret == std::string_view::npos ? 1 : parseNumber(item.substr(caret + 1), text);
    if (repeat < 1) throw std::invalid_argument("exponent must be positive in '" + std::string(text) + "'");
    entries.insert(entries.end(), static_cast<std::size_t>(repeat), value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return OSequence(std::move(entries));
}

std::string OSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(h_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const OSequence& h) { return os << '(' << h.str() << ')'; }

Int genus(const OSequence& h) {
  Int g = 0;
  for (Int j = 2; j < h.length(); ++j) g = checkedAdd(g, checkedMul(j - 1, h.at(j)));
  return g;
}

HilbertData hilbertData(const OSequence& h, Int tMax) {
  if (tMax < 0) throw std::invalid_argument("hilbertData: tMax must be non-negative");
  HilbertData data{h, {}, {}, h.multiplicity(), 1 - genus(h)};
  Int z = 0;
  Int c = 0;
  for (Int t = 0; t <= tMax; ++t) {
    z = checkedAdd(z, h.at(t));
    c = checkedAdd(c, z);
    data.zeroDimFunction.push_back(z);
    data.curveFunction.push_back(c);
  }
  return data;
}

Int genusFromHilbert(const OSequence& h) {
  const Int s = h.length();
  if (s < 2) throw std::invalid_argument("genusFromHilbert: needs length >= 2");
  const auto data = hilbertData(h, s - 2);
  return 1 + (s - 2) * h.multiplicity() - data.curveFunction.back();
}

}  // namespace acm

std::size_t std::hash<acm::OSequence>::operator()(const acm::OSequence& h) const noexcept {
  std::size_t seed = 0;
  for (const auto v : h.entries())
    seed ^= std::hash<acm::Int>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
