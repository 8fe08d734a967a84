#include "maxlin/f2vector.hpp"

#include <bit>
#include <stdexcept>

#include "maxlin/errors.hpp"

namespace maxlin {

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidArgument("F2 vector string may only contain '0' and '1'");
    }
  }
  return v;
}

F2Vector F2Vector::from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  F2Vector v(n);
  for (auto i : indices) {
    if (i >= n) {
      throw InvalidArgument("coordinate " + std::to_string(i) + " out of range for dimension " +
                            std::to_string(n));
    }
    v.set(i, true);
  }
  return v;
}

F2Vector F2Vector::unit(std::size_t n, std::size_t i) { return from_indices(n, {i}); }

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  if (other.n_ != n_) {
    throw DimensionMismatch(n_, other.n_);
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bool F2Vector::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

std::size_t F2Vector::popcount() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) {
    count += static_cast<std::size_t>(std::popcount(w));
  }
  return count;
}

std::size_t F2Vector::lowest_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return n_;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool F2Vector::dot(const F2Vector& other) const {
  if (other.n_ != n_) {
    throw DimensionMismatch(n_, other.n_);
  }
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

F2Vector F2Vector::suffix(std::size_t first) const {
  if (first > n_) {
    throw InvalidArgument("suffix start past the end of the vector");
  }
  F2Vector out(n_ - first);
  for (std::size_t i = first; i < n_; ++i) {
    if (get(i)) {
      out.set(i - first, true);
    }
  }
  return out;
}

F2Vector F2Vector::select(const std::vector<std::size_t>& kept_coordinates) const {
  F2Vector out(kept_coordinates.size());
  for (std::size_t j = 0; j < kept_coordinates.size(); ++j) {
    if (get(kept_coordinates[j])) {
      out.set(j, true);
    }
  }
  return out;
}

std::string F2Vector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b) {
  std::size_t common = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < common; ++w) {
    F2Vector::Word diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      F2Vector::Word lowest = diff & (~diff + 1);
      return (a.words_[w] & lowest) != 0 ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
    }
  }
  return a.n_ <=> b.n_;
}

std::size_t F2VectorHash::operator()(const F2Vector& v) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(v.size());
  for (auto w : v.words()) {
    h ^= std::hash<F2Vector::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace maxlin
