#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "maxlin/rational.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

/// Nonempty set of 0-based variable indices, strictly increasing.
using Subset = std::vector<std::size_t>;

/// Multilinear polynomial  constant + sum_S c_S prod_{i in S} x_i  on
/// {-1,+1}^n. Zero coefficients are never stored.
class FourierExpansion {
 public:
  explicit FourierExpansion(std::size_t n = 0, Rational constant = 0)
      : n_(n), constant_(std::move(constant)) {}

  std::size_t n() const noexcept { return n_; }
  const Rational& constant() const noexcept { return constant_; }
  const std::map<Subset, Rational>& terms() const noexcept { return terms_; }
  /// |F|, the number of nonconstant monomials.
  std::size_t family_size() const noexcept { return terms_.size(); }
  std::size_t degree() const;

  void set_constant(Rational c) { constant_ = std::move(c); }
  /// Adds c to the coefficient of S (the constant when S is empty) and drops
  /// the monomial if it cancels. S must be strictly increasing and in range.
  void add(const Subset& s, const Rational& c);

  FourierExpansion& operator+=(const FourierExpansion& other);
  /// Product using x_i^2 = 1.
  friend FourierExpansion operator*(const FourierExpansion& a, const FourierExpansion& b);
  FourierExpansion& operator*=(const Rational& c);

  friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;

 private:
  std::size_t n_;
  Rational constant_;
  std::map<Subset, Rational> terms_;
};

/// Value at a point of {-1,+1}^n. Throws InvalidArgument for other entries.
Rational eval_fourier(const FourierExpansion& f, std::span<const int> x);

/// Maps z in F2^n to x with x_i = (-1)^{z_i}.
std::vector<int> to_sign_point(const Assignment& z);

struct SystemWithConstant {
  LinearSystem system;
  Rational constant;
};

/// One equation per monomial, in monomial order: sum_{i in S} z_i = b_S with
/// weight |c_S|, where b_S = 0 iff c_S > 0.
SystemWithConstant fourier_to_system(const FourierExpansion& f);

/// Inverse map with constant 0. Requires distinct left-hand sides.
FourierExpansion system_to_fourier(const LinearSystem& sys);

/// constant + (1 + q) * min |c_S|, where q is the largest integer with
/// (|F| + 2)^q <= 2^rank and rank is that of the associated system.
/// Throws InvalidArgument when f has no nonconstant monomial.
Rational maxima_lower_bound(const FourierExpansion& f);

}  // namespace maxlin
