#include "maxlin/reductions.hpp"

#include <algorithm>
#include <set>

#include "maxlin/errors.hpp"

namespace maxlin {

namespace {

void check_point(std::size_t n, std::span<const int> x) {
  if (x.size() != n) {
    throw DimensionMismatch(n, x.size());
  }
  for (int v : x) {
    if (v != 1 && v != -1) {
      throw InvalidArgument("point entries must be -1 or +1");
    }
  }
}

/// 1 + s * x_i
FourierExpansion affine(std::size_t n, std::size_t var, int s) {
  FourierExpansion f(n, 1);
  f.add({var}, Rational(s));
  return f;
}

}  // namespace

void validate_exact(const CnfFormula& f, std::size_t r) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.size() != r) {
      throw PreconditionError(Precondition::arity_exceeded,
                              "clause " + std::to_string(c + 1) + " has " +
                                  std::to_string(clause.size()) + " literals, expected " +
                                  std::to_string(r));
    }
    std::set<std::size_t> vars;
    for (const auto& lit : clause) {
      if (lit.var >= f.n) {
        throw InvalidArgument("clause " + std::to_string(c + 1) + " uses variable " +
                              std::to_string(lit.var + 1) + " > n");
      }
      if (!vars.insert(lit.var).second) {
        throw InvalidArgument("clause " + std::to_string(c + 1) + " repeats a variable");
      }
    }
  }
}

FourierExpansion sat_to_fourier(const CnfFormula& f, std::size_t r) {
  validate_exact(f, r);
  FourierExpansion g(f.n);
  for (const auto& clause : f.clauses) {
    FourierExpansion product(f.n, 1);
    for (const auto& lit : clause) {
      product = product * affine(f.n, lit.var, lit.negated ? -1 : 1);
    }
    product *= Rational(-1);
    product.add({}, 1);
    g += product;
  }
  return g;
}

bool clause_satisfied(const Clause& c, std::span<const int> x) {
  return std::any_of(c.begin(), c.end(), [&](const Literal& lit) {
    return lit.negated ? x[lit.var] == 1 : x[lit.var] == -1;
  });
}

std::size_t count_satisfied(const CnfFormula& f, std::span<const int> x) {
  check_point(f.n, x);
  return static_cast<std::size_t>(std::count_if(
      f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return clause_satisfied(c, x); }));
}

SatIdentity sat_satisfied_count_identity(const CnfFormula& f, std::size_t r,
                                         std::span<const int> x) {
  SatIdentity out;
  out.satisfied = count_satisfied(f, x);
  out.g_value = eval_fourier(sat_to_fourier(f, r), x);
  const Rational m = f.clauses.size();
  const Rational expected = m - (m - Rational(out.satisfied)) * Rational(BigInt(1) << r);
  if (out.g_value != expected) {
    throw InternalError("clause polynomial value disagrees with the satisfied count");
  }
  return out;
}

SatDecision decide_sat_aa(const CnfFormula& f, std::size_t r, std::int64_t k,
                          const OracleOptions& options) {
  if (r < 2) {
    throw PreconditionError(Precondition::parameter_too_small, "r must be at least 2");
  }
  if (k < 1) {
    throw PreconditionError(Precondition::parameter_too_small, "k must be positive");
  }
  FourierExpansion g = sat_to_fourier(f, r);
  SystemWithConstant assoc = fourier_to_system(g);
  // g(x) = constant + excess(z), so the question is excess >= k - constant.
  const Rational shifted = Rational(k) - assoc.constant;
  if (!is_integral(shifted)) {
    throw InternalError("clause expansion produced a non-integral constant");
  }
  const auto needed = boost::multiprecision::numerator(shifted).convert_to<std::int64_t>();

  SatDecision out;
  out.linear = decide_aa(AaInstance{assoc.system, std::max<std::int64_t>(needed, 1)}, options);
  out.yes = needed <= 0 || out.linear.yes;

  const Assignment& z = out.linear.witness.assignment;
  std::vector<int> x = to_sign_point(z);
  out.truth.resize(f.n);
  for (std::size_t i = 0; i < f.n; ++i) {
    out.truth[i] = x[i] == -1;
  }
  SatIdentity id = sat_satisfied_count_identity(f, r, x);
  out.satisfied = id.satisfied;
  if (id.g_value != assoc.constant + out.linear.witness.excess) {
    throw InternalError("witness excess disagrees with the clause polynomial");
  }
  // s >= (1 - 2^-r) m + k 2^-r  <=>  2^r s >= (2^r - 1) m + k
  const BigInt scale = BigInt(1) << r;
  const bool meets = scale * out.satisfied >= (scale - 1) * f.clauses.size() + k;
  if (meets != out.yes) {
    throw InternalError("translated witness contradicts the decision");
  }
  return out;
}

void validate_csp(const CspInstance& inst, std::size_t r) {
  for (std::size_t c = 0; c < inst.constraints.size(); ++c) {
    const auto& con = inst.constraints[c];
    const std::string where = "constraint " + std::to_string(c + 1);
    if (con.vars.empty()) {
      throw InvalidArgument(where + " has arity 0");
    }
    if (con.vars.size() > r) {
      throw PreconditionError(Precondition::arity_exceeded,
                              where + " has arity " + std::to_string(con.vars.size()) +
                                  " > r = " + std::to_string(r));
    }
    if (std::set<std::size_t>(con.vars.begin(), con.vars.end()).size() != con.vars.size()) {
      throw InvalidArgument(where + " repeats a variable");
    }
    for (auto v : con.vars) {
      if (v >= inst.n) {
        throw InvalidArgument(where + " uses variable " + std::to_string(v + 1) + " > n");
      }
    }
    if (con.satisfying.empty()) {
      throw InvalidArgument(where + " has no satisfying tuple");
    }
    std::set<std::vector<int>> seen;
    for (const auto& tuple : con.satisfying) {
      if (tuple.size() != con.vars.size()) {
        throw InvalidArgument(where + " has a tuple of the wrong length");
      }
      for (int v : tuple) {
        if (v != 1 && v != -1) {
          throw InvalidArgument(where + " has a tuple entry other than -1/+1");
        }
      }
      if (!seen.insert(tuple).second) {
        throw InvalidArgument(where + " lists a satisfying tuple twice");
      }
    }
  }
}

FourierExpansion csp_to_fourier(const CspInstance& inst, std::size_t r) {
  validate_csp(inst, r);
  FourierExpansion h(inst.n);
  for (const auto& con : inst.constraints) {
    FourierExpansion hf(inst.n);
    for (const auto& tuple : con.satisfying) {
      FourierExpansion product(inst.n, 1);
      for (std::size_t j = 0; j < con.vars.size(); ++j) {
        product = product * affine(inst.n, con.vars[j], tuple[j]);
      }
      product.add({}, -1);
      hf += product;
    }
    hf *= Rational(BigInt(1) << (r - con.vars.size()));
    h += hf;
  }
  return h;
}

Rational csp_average_satisfied(const CspInstance& inst) {
  Rational e = 0;
  for (const auto& con : inst.constraints) {
    e += Rational(BigInt(con.satisfying.size()), BigInt(1) << con.vars.size());
  }
  return e;
}

std::size_t count_satisfied(const CspInstance& inst, std::span<const int> x) {
  check_point(inst.n, x);
  std::size_t s = 0;
  for (const auto& con : inst.constraints) {
    std::vector<int> local;
    for (auto v : con.vars) {
      local.push_back(x[v]);
    }
    if (std::find(con.satisfying.begin(), con.satisfying.end(), local) != con.satisfying.end()) {
      ++s;
    }
  }
  return s;
}

CspIdentity csp_satisfied_count_identity(const CspInstance& inst, std::size_t r,
                                         std::span<const int> x) {
  CspIdentity out;
  out.satisfied = count_satisfied(inst, x);
  out.h_value = eval_fourier(csp_to_fourier(inst, r), x);
  out.average = csp_average_satisfied(inst);
  if (out.h_value != Rational(BigInt(1) << r) * (Rational(out.satisfied) - out.average)) {
    throw InternalError("constraint polynomial value disagrees with the satisfied count");
  }
  return out;
}

KernelOutcome kernelize_rlin(const LinearSystem& sys, std::size_t r, std::int64_t k) {
  if (k < 2) {
    throw PreconditionError(Precondition::parameter_too_small, "k must be at least 2");
  }
  if (sys.max_arity() > r) {
    throw PreconditionError(Precondition::arity_exceeded,
                            "an equation has " + std::to_string(sys.max_arity()) +
                                " variables, r = " + std::to_string(r));
  }
  if (!sys.all_weights_integral()) {
    throw NonIntegralWeight("kernelization requires integral weights");
  }
  Reduced reduced = make_irreducible(sys);
  KernelOutcome out;
  out.k = k;
  const auto uk = static_cast<std::size_t>(k);
  if (in_lower_bound_regime(reduced.system.n(), reduced.system.size(), uk)) {
    ExcessWitness local = lower_bound_assignment(reduced.system, uk);
    Assignment lifted = lift_assignment(reduced.transcript, local.assignment);
    out.yes = true;
    out.witness = ExcessWitness{lifted, evaluate(sys, lifted).excess, local.method};
  }
  out.kernel = std::move(reduced.system);
  out.transcript = std::move(reduced.transcript);
  return out;
}

}  // namespace maxlin
