#include "acm/genus_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace acm {

namespace {
constexpr Int kWordBits = 64;
}

GenusSet::GenusSet(Int d) : d_(d), size_(choose2(d - 1) + 1) {
  if (d < 1) throw std::invalid_argument("GenusSet: d must be positive");
  words_.assign(static_cast<std::size_t>((size_ + kWordBits - 1) / kWordBits), 0);
}

bool GenusSet::contains(Int g) const {
  if (g < 0 || g >= size_) return false;
  return (words_[static_cast<std::size_t>(g / kWordBits)] >> (g % kWordBits)) & 1U;
}

void GenusSet::insert(Int g) {
  if (g < 0 || g >= size_) throw std::out_of_range("GenusSet: value outside R_d");
  words_[static_cast<std::size_t>(g / kWordBits)] |= std::uint64_t{1} << (g % kWordBits);
}

void GenusSet::erase(Int g) {
  if (g < 0 || g >= size_) return;
  words_[static_cast<std::size_t>(g / kWordBits)] &= ~(std::uint64_t{1} << (g % kWordBits));
}

void GenusSet::insertPrefix(Int last) {
  last = std::min(last, upper());
  for (Int g = 0; g <= last; ++g) insert(g);
}

void GenusSet::unionShifted(const GenusSet& other, Int shift) {
  if (shift < 0) throw std::invalid_argument("GenusSet: negative shift");
  const auto wordShift = static_cast<std::size_t>(shift / kWordBits);
  const auto bitShift = static_cast<unsigned>(shift % kWordBits);
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i < other.words_.size() && i + wordShift < n; ++i) {
    const std::uint64_t w = other.words_[i];
    if (w == 0) continue;
    words_[i + wordShift] |= w << bitShift;
    if (bitShift != 0 && i + wordShift + 1 < n) words_[i + wordShift + 1] |= w >> (kWordBits - bitShift);
  }
  clearPadding();
}

void GenusSet::clearPadding() {
  const Int used = size_ % kWordBits;
  if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
}

Int GenusSet::count() const {
  Int n = 0;
  for (const auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<Int> GenusSet::values() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Int>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

bool GenusSet::isSubsetOf(const GenusSet& other) const {
  for (const Int g : values())
    if (!other.contains(g)) return false;
  return true;
}

std::string GenusSet::toHex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  const Int nibbles = (size_ + 3) / 4;
  for (Int k = 0; k < nibbles; ++k) {
    const auto word = words_[static_cast<std::size_t>((4 * k) / kWordBits)];
    out.push_back(digits[(word >> ((4 * k) % kWordBits)) & 0xF]);
  }
  return out;
}

std::optional<GenusSet> GenusSet::fromHex(Int d, std::string_view hex) {
  if (d < 1) return std::nullopt;
  GenusSet set(d);
  if (static_cast<Int>(hex.size()) != (set.size_ + 3) / 4) return std::nullopt;
  for (Int k = 0; k < static_cast<Int>(hex.size()); ++k) {
    const char c = hex[static_cast<std::size_t>(k)];
    std::uint64_t nibble;
    if (c >= '0' && c <= '9')
      nibble = static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f')
      nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    else
      return std::nullopt;
    for (Int b = 0; b < 4; ++b) {
      if (((nibble >> b) & 1U) == 0) continue;
      if (4 * k + b >= set.size_) return std::nullopt;  // padding must be zero
      set.insert(4 * k + b);
    }
  }
  return set;
}

}  // namespace acm
