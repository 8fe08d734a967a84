#include "maxlin/fourier.hpp"

#include <algorithm>
#include <iterator>

#include "maxlin/errors.hpp"
#include "maxlin/reduce.hpp"

namespace maxlin {

std::size_t FourierExpansion::degree() const {
  std::size_t d = 0;
  for (const auto& [s, c] : terms_) {
    d = std::max(d, s.size());
  }
  return d;
}

void FourierExpansion::add(const Subset& s, const Rational& c) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n_) {
      throw InvalidArgument("variable index " + std::to_string(s[i] + 1) + " exceeds n = " +
                            std::to_string(n_));
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw InvalidArgument("monomial indices must be strictly increasing");
    }
  }
  if (s.empty()) {
    constant_ += c;
    return;
  }
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

FourierExpansion& FourierExpansion::operator+=(const FourierExpansion& other) {
  if (other.n_ != n_) {
    throw DimensionMismatch(n_, other.n_);
  }
  constant_ += other.constant_;
  for (const auto& [s, c] : other.terms_) {
    add(s, c);
  }
  return *this;
}

FourierExpansion operator*(const FourierExpansion& a, const FourierExpansion& b) {
  if (a.n_ != b.n_) {
    throw DimensionMismatch(a.n_, b.n_);
  }
  auto with_constant = [](const FourierExpansion& f) {
    std::vector<std::pair<Subset, Rational>> out;
    if (f.constant_ != 0) {
      out.emplace_back(Subset{}, f.constant_);
    }
    out.insert(out.end(), f.terms_.begin(), f.terms_.end());
    return out;
  };
  FourierExpansion out(a.n_);
  for (const auto& [sa, ca] : with_constant(a)) {
    for (const auto& [sb, cb] : with_constant(b)) {
      Subset s;
      std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                    std::back_inserter(s));
      out.add(s, ca * cb);
    }
  }
  return out;
}

FourierExpansion& FourierExpansion::operator*=(const Rational& c) {
  constant_ *= c;
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

Rational eval_fourier(const FourierExpansion& f, std::span<const int> x) {
  if (x.size() != f.n()) {
    throw DimensionMismatch(f.n(), x.size());
  }
  for (int v : x) {
    if (v != 1 && v != -1) {
      throw InvalidArgument("point entries must be -1 or +1");
    }
  }
  Rational value = f.constant();
  for (const auto& [s, c] : f.terms()) {
    int sign = 1;
    for (auto i : s) {
      sign *= x[i];
    }
    value += sign > 0 ? c : Rational(-c);
  }
  return value;
}

std::vector<int> to_sign_point(const Assignment& z) {
  std::vector<int> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[i] = z.get(i) ? -1 : 1;
  }
  return x;
}

SystemWithConstant fourier_to_system(const FourierExpansion& f) {
  SystemWithConstant out{LinearSystem(f.n()), f.constant()};
  for (const auto& [s, c] : f.terms()) {
    bool negative = c < 0;
    out.system.add(F2Vector::from_indices(f.n(), s), negative, negative ? Rational(-c) : c);
  }
  return out;
}

FourierExpansion system_to_fourier(const LinearSystem& sys) {
  if (!has_distinct_lhs(sys)) {
    throw InvalidArgument("system has repeated left-hand sides; merge them first");
  }
  FourierExpansion f(sys.n());
  for (const auto& e : sys.equations()) {
    f.add(e.lhs.support(), e.rhs ? Rational(-e.weight) : e.weight);
  }
  return f;
}

Rational maxima_lower_bound(const FourierExpansion& f) {
  if (f.family_size() == 0) {
    throw InvalidArgument("the bound needs at least one nonconstant monomial");
  }
  SystemWithConstant assoc = fourier_to_system(f);
  const std::size_t rank = apply_rule1(assoc.system).system.n();
  const std::uint64_t q = max_power_within_pow2(BigInt(f.family_size() + 2), rank);
  return f.constant() + Rational(1 + q) * assoc.system.min_weight();
}

}  // namespace maxlin
