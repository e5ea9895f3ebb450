#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acm/integer.hpp"

namespace acm {

/// Dense bit set over R_d = [0, C(d-1,2)].
class GenusSet {
 public:
  explicit GenusSet(Int d);

  Int degree() const { return d_; }
  /// Largest representable value, C(d-1, 2).
  Int upper() const { return size_ - 1; }
  Int size() const { return size_; }

  bool contains(Int g) const;
  void insert(Int g);
  void erase(Int g);
  /// Inserts {0, ..., last}, clipped to R_d.
  void insertPrefix(Int last);

  /// this |= (other + shift), keeping only values inside R_d.
  void unionShifted(const GenusSet& other, Int shift);

  Int count() const;
  std::vector<Int> values() const;
  bool isSubsetOf(const GenusSet& other) const;

  /// Nibble k of the string holds bits 4k..4k+3, least significant bit first.
  std::string toHex() const;
  static std::optional<GenusSet> fromHex(Int d, std::string_view hex);

  friend bool operator==(const GenusSet&, const GenusSet&) = default;

 private:
  void clearPadding();

  Int d_;
  Int size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace acm
