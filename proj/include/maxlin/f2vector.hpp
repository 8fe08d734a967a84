#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace maxlin {

/// Fixed-length vector over F2, packed 64 coordinates per word.
///
/// Coordinates are 0-based in code; text formats use 1-based indices. Bits
/// past size() in the last word are always zero, so word-wise comparisons
/// and hashes are exact.
class F2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  F2Vector() = default;
  explicit F2Vector(std::size_t n) : n_(n), words_((n + word_bits - 1) / word_bits, 0) {}

  /// Builds a vector from a string of '0'/'1' characters, coordinate 0 first.
  static F2Vector from_string(std::string_view bits);
  static F2Vector from_indices(std::size_t n, const std::vector<std::size_t>& indices);
  static F2Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return n_; }

  bool get(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i, bool value) noexcept {
    Word mask = Word{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

  /// Coordinate-wise XOR. Throws DimensionMismatch on differing sizes.
  F2Vector& operator^=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  /// Smallest set coordinate, or size() when the vector is zero.
  std::size_t lowest_set() const noexcept;
  std::vector<std::size_t> support() const;

  /// Inner product over F2. Throws DimensionMismatch on differing sizes.
  bool dot(const F2Vector& other) const;

  /// Coordinates [first, size()) as a new vector of length size() - first.
  F2Vector suffix(std::size_t first) const;
  /// Projection onto the listed coordinates, in the order given.
  F2Vector select(const std::vector<std::size_t>& kept_coordinates) const;

  std::string to_string() const;

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

  /// Lexicographic order on the 0/1 string, coordinate 0 most significant.
  friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b);

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct F2VectorHash {
  std::size_t operator()(const F2Vector& v) const noexcept;
};

}  // namespace maxlin
