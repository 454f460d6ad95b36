#include "mathieu/mathieu_harness.hpp"

#include <algorithm>
#include <memory>

#include "mathieu/number_theory.hpp"

namespace mathieu {
namespace {

void require_vars(const Polynomial& f, const VariablesPtr& vars, const Ring& ring) {
  if (!same_variables(f.variables(), vars) || !(f.ring() == ring)) {
    throw RingMismatch("element of " + f.ring().name() + f.variables()->to_string() +
                       " tested against a subspace of " + ring.name() + vars->to_string());
  }
}

void enumerate(const VariablesPtr& vars, int bound, std::size_t var, int used, Exponents& current,
               std::vector<Exponents>& out) {
  if (var == vars->size()) {
    out.push_back(current);
    return;
  }
  const int low = vars->is_laurent(var) ? -(bound - used) : 0;
  for (int k = low; k <= bound - used; ++k) {
    current[var] = k;
    enumerate(vars, bound, var + 1, used + (k < 0 ? -k : k), current, out);
  }
  current[var] = 0;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::premise_failed: return "premise_failed";
    case Verdict::consistent: return "consistent";
    case Verdict::violation_witness: return "violation_witness";
  }
  return "?";
}

std::vector<Polynomial> monomial_basis(const Ring& ring, const VariablesPtr& vars, int bound) {
  if (bound < 0) throw DomainError("negative degree bound");
  std::vector<Exponents> exps;
  Exponents scratch(vars->size(), 0);
  enumerate(vars, bound, 0, 0, scratch, exps);
  std::vector<Polynomial> out;
  out.reserve(exps.size());
  for (auto& e : exps) out.push_back(Polynomial::monomial(ring, vars, std::move(e), Scalar::one(ring)));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return GrlexGreater{}(b.terms().begin()->first, a.terms().begin()->first);
  });
  return out;
}

SubspaceOracle<Polynomial> kerl_oracle(const PhaseSpace& phase, const Ring& ring) {
  auto test = [phase, ring](const Polynomial& f) {
    require_vars(f, phase.symbols, ring);
    const Polynomial value = l_map(f, phase);
    return Membership{value.is_zero(), value.to_string()};
  };
  return SubspaceOracle<Polynomial>("kerl", ring.name() + phase.symbols->to_string(), test,
                                    monomial_basis(ring, phase.symbols, 2));
}

SubspaceOracle<Polynomial> laurent_constant_oracle(const Ring& ring, const std::string& var) {
  const VariablesPtr vars = VariableSet::laurent(var);
  auto test = [vars, ring](const Polynomial& f) {
    require_vars(f, vars, ring);
    const Scalar c = f.constant_term();
    return Membership{c.is_zero(), c.to_string()};
  };
  return SubspaceOracle<Polynomial>("laurent", ring.name() + vars->to_string(), test,
                                    monomial_basis(ring, vars, 2));
}

SubspaceOracle<Polynomial> moment_oracle(const MomentFunctional& m, const std::string& var) {
  const VariablesPtr vars = VariableSet::make(std::vector<std::string>{var});
  const Ring ring = Ring::rationals();
  auto cache = std::make_shared<MomentFunctional>(m);
  auto test = [vars, ring, cache](const Polynomial& f) {
    require_vars(f, vars, ring);
    const long deg = f.total_degree().value_or(0);
    if (static_cast<long>(cache->size()) <= deg) *cache = moments(cache->weight(), static_cast<int>(2 * deg));
    const Scalar value = integrate(f, *cache);
    return Membership{value.is_zero(), value.to_string()};
  };
  return SubspaceOracle<Polynomial>("moment:" + m.weight().name(), "q" + vars->to_string(), test,
                                    monomial_basis(ring, vars, 3));
}

SubspaceOracle<ScalarMatrix> trace_oracle(std::size_t dim, const Ring& ring) {
  if (dim == 0) throw DomainError("matrix dimension must be positive");
  if (ring.characteristic() != 0 && ring.characteristic() <= dim) {
    throw DomainError("the trace-zero subspace is only tested in characteristic 0 or above the "
                      "dimension; " + ring.name() + " with dimension " + std::to_string(dim) +
                      " violates that hypothesis");
  }
  auto test = [dim, ring](const ScalarMatrix& a) {
    if (a.rows() != dim || a.cols() != dim || !(a.zero().ring() == ring)) {
      throw RingMismatch("expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                         " matrix over " + ring.name());
    }
    const Scalar t = a.trace();
    return Membership{t.is_zero(), t.to_string()};
  };
  std::vector<ScalarMatrix> samples;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ScalarMatrix e = scalar_matrix(ring, dim, dim);
      e(i, j) = Scalar::one(ring);
      samples.push_back(e);
    }
  }
  return SubspaceOracle<ScalarMatrix>("trace", ring.name() + "^" + std::to_string(dim) + "x" +
                                                   std::to_string(dim),
                                      test, samples);
}

SubspaceOracle<Polynomial> derivative_image_oracle(std::uint64_t p, const std::string& var) {
  const Ring ring = Ring::prime_field(p);
  const VariablesPtr vars = VariableSet::make(std::vector<std::string>{var});
  auto test = [vars, ring, p](const Polynomial& f) {
    require_vars(f, vars, ring);
    Polynomial missing(ring, vars);
    for (const auto& [e, c] : f.terms()) {
      if ((static_cast<std::uint64_t>(e[0]) + 1) % p == 0) {
        missing += Polynomial::monomial(ring, vars, e, c);
      }
    }
    return Membership{missing.is_zero(), missing.to_string()};
  };
  return SubspaceOracle<Polynomial>("derivative_image", ring.name() + vars->to_string(), test,
                                    monomial_basis(ring, vars, static_cast<int>(2 * p)));
}

SubspaceOracle<Polynomial> whole_ring_oracle(const Ring& ring, const VariablesPtr& vars) {
  auto test = [vars, ring](const Polynomial& f) {
    require_vars(f, vars, ring);
    return Membership{true, "0"};
  };
  return SubspaceOracle<Polynomial>("whole_ring", ring.name() + vars->to_string(), test);
}

}  // namespace mathieu
