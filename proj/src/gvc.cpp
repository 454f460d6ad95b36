#include "mathieu/gvc.hpp"

#include "mathieu/errors.hpp"

namespace mathieu {

GvcScan gvc_scan(const WeylElement& lambda, const Polynomial& p, const Polynomial& q, int m_max,
                 const PhaseSpace& phase) {
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  if (!lambda.is_constant_coefficient()) {
    throw DomainError("the operator must have constant coefficients");
  }
  if (!same_variables(lambda.coordinates(), phase.coordinates) ||
      !same_variables(p.variables(), phase.coordinates) ||
      !same_variables(q.variables(), phase.coordinates)) {
    throw RingMismatch("operator and polynomials must live on " + phase.coordinates->to_string());
  }
  const Polynomial f = right_symbol(lambda, phase) * p.embed(phase.symbols);
  const Polynomial q_sym = q.embed(phase.symbols);
  const Degree order = lambda.order();
  const Degree deg_q = q.total_degree();
  const Degree deg_p = p.total_degree();

  GvcScan scan;
  scan.routes_agree = true;
  Polynomial p_power = p;
  Polynomial f_power = f;
  WeylElement lambda_power = lambda;
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) {
      p_power = p_power * p;
      f_power = f_power * f;
      lambda_power = lambda_power * lambda;
    }
    scan.premise_values.push_back(lambda_power.apply(p_power));
    scan.q_values.push_back(lambda_power.apply(q * p_power));
    scan.l_premise_values.push_back(l_map(f_power, phase));
    scan.l_q_values.push_back(l_map(q_sym * f_power, phase));
    scan.routes_agree = scan.routes_agree && scan.premise_values.back() == scan.l_premise_values.back() &&
                        scan.q_values.back() == scan.l_q_values.back();
    if (scan.premise_held_through == m - 1 && scan.premise_values.back().is_zero()) {
      scan.premise_held_through = m;
    }
  }
  scan.premise_holds = scan.premise_held_through == m_max;

  int last_nonzero = 0;
  for (int m = 1; m <= m_max; ++m) {
    if (!scan.q_values[static_cast<std::size_t>(m - 1)].is_zero()) last_nonzero = m;
  }
  if (last_nonzero < m_max) scan.stabilization_index = last_nonzero + 1;

  if (phase.n == 1 && scan.premise_holds) {
    scan.one_dimensional_bound = deg_q ? *deg_q + 1 : 1;
    for (int m = 1; m <= m_max; ++m) {
      if (scan.q_values[static_cast<std::size_t>(m - 1)].is_zero()) continue;
      const bool order_exceeds =
          order && deg_p && *order * m > (deg_q ? *deg_q : 0) + *deg_p * m;
      if (m >= *scan.one_dimensional_bound || order_exceeds) scan.bound_respected = false;
    }
  }
  return scan;
}

PolynomialMatrix jacobian_matrix(const std::vector<Polynomial>& h) {
  if (h.empty()) throw DomainError("empty map");
  const VariablesPtr vars = h.front().variables();
  const std::size_t n = h.size();
  if (vars->size() != n) throw DomainError("the Jacobian needs as many components as variables");
  PolynomialMatrix j(n, n, h.front().zero_like());
  for (std::size_t r = 0; r < n; ++r) {
    if (!same_variables(h[r].variables(), vars) || !(h[r].ring() == h.front().ring())) {
      throw RingMismatch("components of H live in different rings");
    }
    for (std::size_t c = 0; c < n; ++c) j(r, c) = h[r].derivative(c);
  }
  return j;
}

bool is_nilpotent(const PolynomialMatrix& j) {
  if (!j.is_square()) throw DomainError("nilpotency of a non-square matrix");
  return j.pow(static_cast<unsigned>(j.rows()), j.zero().one_like()).is_zero();
}

Prop74Report prop74_crosscheck(const std::vector<Polynomial>& h, int m_max, const PhaseSpace& phase) {
  if (h.size() != phase.n) throw DomainError("H needs one component per variable pair");
  for (const auto& hi : h) {
    if (!same_variables(hi.variables(), phase.coordinates)) {
      throw RingMismatch("H must be given over " + phase.coordinates->to_string());
    }
    for (const auto& [e, c] : hi.terms()) {
      long deg = 0;
      for (int x : e) deg += x;
      if (deg <= 1) {
        throw DomainError("H may not contain terms of degree at most one (found in " + hi.to_string() + ")");
      }
    }
  }
  Prop74Report report{is_nilpotent(jacobian_matrix(h)), Polynomial(h.front().ring(), phase.symbols), {}, false};
  for (std::size_t i = 0; i < h.size(); ++i) {
    report.f += Polynomial::variable(h[i].ring(), phase.symbols, phase.symbols->name(phase.symbol_index(i))) *
                h[i].embed(phase.symbols);
  }
  report.scan = power_scan(report.f, m_max, phase);
  report.agree = report.nilpotent ? !report.scan.first_nonzero.has_value()
                                  : report.scan.first_nonzero.has_value();
  return report;
}

}  // namespace mathieu
