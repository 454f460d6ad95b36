#include "mathieu/charp.hpp"

#include <algorithm>

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

void require_problem_ring(const Polynomial& f, const CharPProblem& prob) {
  if (!same_variables(f.variables(), prob.phase.symbols) || !(f.ring() == prob.ring)) {
    throw RingMismatch("expected a polynomial over " + prob.ring.name() + prob.phase.symbols->to_string());
  }
}

Polynomial component(const std::map<long, Polynomial>& parts, long k, const Polynomial& zero) {
  auto it = parts.find(k);
  return it == parts.end() ? zero : it->second;
}

// f / v for a variable v dividing every term; nullopt otherwise.
std::optional<Polynomial> divide_by_variable(const Polynomial& f, std::size_t var) {
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] < 1) return std::nullopt;
    Exponents q = e;
    --q[var];
    terms.emplace_back(std::move(q), c);
  }
  return Polynomial::from_terms(f.ring(), f.variables(), std::move(terms));
}

Polynomial symbol_variable(const PhaseSpace& phase, const Ring& ring, std::size_t i) {
  return Polynomial::variable(ring, phase.symbols, phase.symbols->name(phase.symbol_index(i)));
}

Polynomial dz(const Polynomial& f, const PhaseSpace& phase, std::size_t i) {
  return f.derivative(phase.coordinate_index(i));
}

std::string z_monomial(const PhaseSpace& phase, const Exponents& a) {
  Exponents e(2 * phase.n, 0);
  for (std::size_t i = 0; i < phase.n; ++i) e[phase.coordinate_index(i)] = a[i];
  const std::string s = monomial_to_string(*phase.symbols, e);
  return s.empty() ? "1" : s;
}

void require_u_polynomial(const Polynomial& g) {
  if (g.variables()->size() != 1) throw DomainError("expected a polynomial in one variable u");
  if (g.ring().kind() != RingKind::rationals) throw DomainError("expected rational coefficients");
}

}  // namespace

CharPProblem CharPProblem::make(std::uint64_t p, std::size_t n) {
  if (n == 0) throw DomainError("n must be positive");
  return CharPProblem{p, n, PhaseSpace::make(n), Ring::prime_field(p)};
}

IdealSpec IdealSpec::i_ideal(std::size_t n) {
  IdealSpec out{"I", {}};
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    out.generators.push_back(e);
  }
  return out;
}

IdealSpec IdealSpec::j_ideal(std::size_t n, std::uint64_t p) {
  IdealSpec out{"J", {}};
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = static_cast<int>(p);
    out.generators.push_back(e);
  }
  return out;
}

std::string IdealSpec::to_string() const {
  std::string out = name + " = (";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) out += ", ";
    std::string mono;
    for (std::size_t i = 0; i < generators[k].size(); ++i) {
      if (generators[k][i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "w" + std::to_string(i + 1);
      if (generators[k][i] != 1) mono += "^" + std::to_string(generators[k][i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out + ")";
}

bool monomial_ideal_member(const Polynomial& f, const IdealSpec& ideal, const PhaseSpace& phase) {
  if (!same_variables(f.variables(), phase.symbols)) {
    throw RingMismatch("expected a polynomial over " + phase.symbols->to_string());
  }
  for (const auto& [e, c] : f.terms()) {
    const bool divisible = std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const Exponents& g) {
      for (std::size_t i = 0; i < phase.n; ++i) {
        if (g[i] > e[phase.symbol_index(i)]) return false;
      }
      return true;
    });
    if (!divisible) return false;
  }
  return true;
}

std::map<Exponents, Polynomial> z_coefficients(const Polynomial& f, const PhaseSpace& phase) {
  std::map<Exponents, std::vector<std::pair<Exponents, Scalar>>> grouped;
  for (const auto& [e, c] : f.terms()) {
    Exponents z(phase.n), w = e;
    for (std::size_t i = 0; i < phase.n; ++i) {
      z[i] = e[phase.coordinate_index(i)];
      w[phase.coordinate_index(i)] = 0;
    }
    grouped[z].emplace_back(std::move(w), c);
  }
  std::map<Exponents, Polynomial> out;
  for (auto& [z, terms] : grouped) {
    out.emplace(z, Polynomial::from_terms(f.ring(), f.variables(), std::move(terms)));
  }
  return out;
}

SufficientWitness sufficient_membership(const Polynomial& b, const CharPProblem& prob) {
  require_problem_ring(b, prob);
  const PhaseSpace& phase = prob.phase;
  const int p = static_cast<int>(prob.p);
  SufficientWitness out;
  out.witness.assign(phase.n, Polynomial(prob.ring, phase.symbols));
  for (const auto& [e, c] : b.terms()) {
    std::size_t i = 0;
    while (i < phase.n && e[phase.symbol_index(i)] < p) ++i;
    if (i == phase.n) {
      Exponents z(phase.n);
      for (std::size_t k = 0; k < phase.n; ++k) z[k] = e[phase.coordinate_index(k)];
      out.reason = "coefficient of " + z_monomial(phase, z) + " is not in " +
                   IdealSpec::j_ideal(phase.n, prob.p).to_string();
      out.witness.clear();
      return out;
    }
    // c w^a z^b = (d_i - w_i) h with h = (d_i - w_i)^(p-1) (-c w^(a - p e_i) z^b).
    Exponents rest = e;
    rest[phase.symbol_index(i)] -= p;
    Polynomial h = Polynomial::monomial(prob.ring, phase.symbols, rest, -c);
    for (int k = 0; k < p - 1; ++k) h = dz(h, phase, i) - symbol_variable(phase, prob.ring, i) * h;
    out.witness[i] += h;
  }
  if (!verify_witness(b, out.witness, phase)) {
    throw VerificationFailure("assembled witness does not reproduce " + b.to_string());
  }
  out.found = true;
  return out;
}

Polynomial koszul_solve(const Polynomial& p, const Polynomial& q, const PhaseSpace& phase) {
  if (phase.n != 2) throw DomainError("the Koszul step is implemented for n = 2");
  if (!same_variables(p.variables(), phase.symbols) || !same_variables(q.variables(), phase.symbols)) {
    throw RingMismatch("expected polynomials over " + phase.symbols->to_string());
  }
  const Ring ring = p.ring();
  const Polynomial w1 = symbol_variable(phase, ring, 0);
  const Polynomial w2 = symbol_variable(phase, ring, 1);
  if (!(w1 * p + w2 * q).is_zero()) throw DomainError("w1 P + w2 Q is not zero");
  const Grading zdeg = Grading::z_only(phase);
  if (!p.is_homogeneous(zdeg) || !q.is_homogeneous(zdeg) ||
      (!p.is_zero() && !q.is_zero() && p.grade_degree(zdeg) != q.grade_degree(zdeg))) {
    throw DomainError("P and Q must be homogeneous of the same degree");
  }
  const auto g = divide_by_variable(p, phase.symbol_index(1));
  if (!g) throw VerificationFailure("w2 does not divide P although the relation holds");
  if (!(q == -(w1 * *g))) throw VerificationFailure("Q differs from -w1 g");
  return *g;
}

DescentWitness crucial_lemma_descent(const Polynomial& b, const Polynomial& p_wit, const Polynomial& q_wit,
                                     const CharPProblem& prob) {
  if (prob.n != 2) throw DomainError("the degree descent is implemented for n = 2");
  require_problem_ring(b, prob);
  require_problem_ring(p_wit, prob);
  require_problem_ring(q_wit, prob);
  const PhaseSpace& phase = prob.phase;
  if (!verify_witness(b, {p_wit, q_wit}, phase)) {
    throw DomainError("b is not (d1 - w1) p + (d2 - w2) q for the given p, q");
  }
  const Polynomial zero(prob.ring, phase.symbols);
  const Grading zdeg = Grading::z_only(phase);
  DescentWitness out{b.grade_degree(zdeg), zero, zero, zero, zero, true, true};
  if (!out.d) return out;
  const long d = *out.d;
  for (const Polynomial* w : {&p_wit, &q_wit}) {
    const Degree dw = w->grade_degree(zdeg);
    if (dw && *dw > d + 2) {
      throw DomainError("witness degree " + std::to_string(*dw) + " exceeds deg b + 2 = " + std::to_string(d + 2));
    }
  }
  const auto pc = p_wit.homogeneous_components(zdeg);
  const auto qc = q_wit.homogeneous_components(zdeg);
  const Polynomial w1 = symbol_variable(phase, prob.ring, 0);
  const Polynomial w2 = symbol_variable(phase, prob.ring, 1);

  // Degree d+2: w1 p_{d+2} + w2 q_{d+2} = 0.
  out.g_top = koszul_solve(component(pc, d + 2, zero), component(qc, d + 2, zero), phase);
  // Degree d+1: w1 (p_{d+1} + d2 g) + w2 (q_{d+1} - d1 g) = 0.
  out.g_next = koszul_solve(component(pc, d + 1, zero) + dz(out.g_top, phase, 1),
                            component(qc, d + 1, zero) - dz(out.g_top, phase, 0), phase);
  out.b_top = component(b.homogeneous_components(zdeg), d, zero);
  out.identity_rhs = -(w1 * (component(pc, d, zero) + dz(out.g_next, phase, 1))) -
                     w2 * (component(qc, d, zero) - dz(out.g_next, phase, 0));
  out.identity_holds = out.identity_rhs == out.b_top;
  if (!out.identity_holds) throw VerificationFailure("descent identity for b_d failed");
  out.top_in_i = monomial_ideal_member(out.b_top, IdealSpec::i_ideal(2), phase);
  if (!out.top_in_i) throw VerificationFailure("b_d has a coefficient outside I");
  return out;
}

Theorem51Report theorem51_pipeline(const Polynomial& f, const Polynomial& g, const CharPProblem& prob) {
  require_problem_ring(f, prob);
  require_problem_ring(g, prob);
  const PhaseSpace& phase = prob.phase;
  const IdealSpec i_ideal = IdealSpec::i_ideal(phase.n);
  const IdealSpec j_ideal = IdealSpec::j_ideal(phase.n, prob.p);
  Theorem51Report report;
  for (const auto& [a, fa] : z_coefficients(f, phase)) {
    if (!monomial_ideal_member(fa.pow(static_cast<long>(prob.p)), i_ideal, phase)) {
      report.premise_failures.push_back("coefficient " + fa.to_string() + " of " + z_monomial(phase, a));
    }
  }
  report.premise = report.premise_failures.empty();
  if (!report.premise) return report;

  const long p2 = static_cast<long>(prob.p * prob.p);
  Polynomial power = f.pow(p2);
  report.f_p2_in_j = monomial_ideal_member(power, j_ideal, phase);
  report.passed = report.f_p2_in_j;
  for (int m = static_cast<int>(p2); m <= p2 + 2; ++m) {
    if (m > p2) power = power * f;
    const Polynomial element = g * power;
    Theorem51Check check{m, monomial_ideal_member(element, j_ideal, phase), false};
    if (check.coefficients_in_j) check.witness_verified = sufficient_membership(element, prob).found;
    report.passed = report.passed && check.coefficients_in_j && check.witness_verified;
    report.checks.push_back(check);
  }
  return report;
}

WillemsReport willems_scan(std::uint64_t p, int k_max) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  const Ring ring = Ring::prime_field(p);
  WillemsReport report;
  report.p = p;
  report.k_max = k_max;
  Integer limit = 1;
  for (int k = 0; k < k_max; ++k) limit *= static_cast<unsigned long>(p);
  if (limit > 100000) throw DomainError("p^k_max is too large for an exact scan");
  report.m_max = static_cast<int>(limit.get_si()) - 1;
  for (int k = 1, pk = static_cast<int>(p); k <= k_max; ++k, pk *= static_cast<int>(p)) {
    report.expected.push_back(pk - 1);
  }
  const VariablesPtr vars = VariableSet::laurent("t");
  const Polynomial f = Polynomial::monomial(ring, vars, {-1}, Scalar::one(ring)) +
                       Polynomial::monomial(ring, vars, {static_cast<int>(p) - 1}, Scalar::one(ring));
  report.constant_terms_vanish = true;
  Polynomial power = f;
  for (int m = 1; m <= report.m_max; ++m) {
    if (m > 1) power = power * f;
    if (!power.constant_term().is_zero()) {
      report.constant_terms_vanish = false;
      if (!report.first_nonzero_constant) report.first_nonzero_constant = m;
    }
    // Constant coefficient of t^-1 f^m is the t^1 coefficient of f^m.
    if (!power.coefficient({1}).is_zero()) report.violations.push_back(m);
  }
  report.expected_all_nonzero = std::all_of(report.expected.begin(), report.expected.end(), [&](int m) {
    return std::find(report.violations.begin(), report.violations.end(), m) != report.violations.end();
  });
  for (int m : report.violations) {
    if (std::find(report.expected.begin(), report.expected.end(), m) == report.expected.end()) {
      report.other_violations.push_back(m);
    }
  }
  return report;
}

Example12Report example12_refutation(std::uint64_t p, std::optional<int> bound) {
  const Ring ring = Ring::prime_field(p);
  const VariablesPtr vars = VariableSet::make(std::vector<std::string>{"z"});
  Example12Report report;
  report.p = p;
  report.bound = bound.value_or(static_cast<int>(4 * p));
  const DiffOperatorSpec d({WeylElement::derivation(ring, vars, "z")});

  const Polynomial one = Polynomial::constant(ring, vars, 1);
  const WitnessSearch one_search = bounded_witness_search(d, one, report.bound);
  report.one_in_image = one_search.found;
  for (const auto& h : one_search.witness) report.one_witness.push_back(h.to_string());

  for (int k = 0; k <= report.bound; ++k) {
    const Polynomial zk = Polynomial::monomial(ring, vars, {k}, Scalar::one(ring));
    report.images.emplace_back(k, d.operators().front().apply(zk).to_string());
  }
  const Polynomial target = Polynomial::monomial(ring, vars, {static_cast<int>(p) - 1}, Scalar::one(ring));
  report.target_in_span = bounded_witness_search(d, target, report.bound).found;

  report.probe = one_property_probe(derivative_image_oracle(p, "z"), one, monomial_basis(ring, vars, report.bound));
  report.refuted = report.one_in_image && !report.target_in_span && report.probe.refuted();
  return report;
}

FrobeniusReport frobenius_expansion_check(const Polynomial& g, std::uint64_t p) {
  require_u_polynomial(g);
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g.is_zero()) throw DomainError("g must be nonzero");
  for (const auto& [e, c] : g.terms()) {
    if (e[0] < 0 || !c.to_rational().is_integer()) throw DomainError("g must have integer coefficients");
  }
  // Terms are stored largest degree first.
  const auto& [low_exp, low_coef] = *g.terms().rbegin();
  if (!low_coef.is_one()) throw DomainError("the lowest term of g must have coefficient 1");

  FrobeniusReport report{p, low_exp[0], g.zero_like(), {}, true};
  const long pl = static_cast<long>(p);
  Polynomial main = g.zero_like();
  for (const auto& [e, c] : g.terms()) {
    main += Polynomial::monomial(g.ring(), g.variables(), {e[0] * static_cast<int>(p)}, c.pow(p));
  }
  report.remainder = g.pow(pl) - main;
  for (const auto& [e, c] : report.remainder.terms()) {
    const Integer value = c.to_rational().numerator();
    if (value % Integer(static_cast<unsigned long>(p)) != 0) {
      report.divisible = false;
      continue;
    }
    report.h.emplace(e[0], Integer(value / Integer(static_cast<unsigned long>(p))));
  }
  return report;
}

Lemma81Report lemma81_nonvanishing(const Polynomial& g, const std::vector<std::uint64_t>& candidates) {
  require_u_polynomial(g);
  if (g.is_zero()) throw DomainError("g must be nonzero");
  for (const auto& [e, c] : g.terms()) {
    if (e[0] < 0) throw DomainError("g must be a polynomial");
  }
  Lemma81Report report{g, 0, 0, {}, std::nullopt, Rational(0), Rational(0), std::nullopt, {}, false};
  const auto& [low_exp, low_coef] = *g.terms().rbegin();
  report.normalized = g.scaled(low_coef.inverse());
  report.s = low_exp[0];
  report.d = static_cast<int>(*g.degree_in(0));

  std::uint64_t threshold = static_cast<std::uint64_t>(report.d);
  std::vector<Rational> c(static_cast<std::size_t>(report.d + 1), Rational(0));
  for (const auto& [e, coef] : report.normalized.terms()) {
    c[static_cast<std::size_t>(e[0])] = coef.to_rational();
    for (const Integer& q : prime_divisors(coef.to_rational().denominator())) {
      threshold = std::max<std::uint64_t>(threshold, q.get_ui());
    }
  }

  std::vector<std::uint64_t> order = candidates;
  if (order.empty()) {
    std::uint64_t q = threshold;
    for (int k = 0; k < 25; ++k) order.push_back(q = next_prime(q));
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  const int s = report.s;
  for (const std::uint64_t p : order) {
    if (!is_prime(p)) {
      report.rejected.emplace_back(p, "not prime");
      continue;
    }
    if (p <= threshold) {
      report.rejected.emplace_back(p, "not above the degree and the denominator primes");
      continue;
    }
    const int pi = static_cast<int>(p);
    const Polynomial gp = report.normalized.pow(static_cast<long>(p));
    const Rational l_value = factorial_functional(gp).to_rational();
    const Rational sp_fact(factorial(static_cast<unsigned long>(s * pi)));
    const Rational ratio = l_value / sp_fact;

    // 1 + sum c_i^p (ip) n_i + p sum h_i q_i with (ip)! = ip (sp)! n_i and
    // i! = q_i (sp)!.
    std::vector<ValuationSummand> trace;
    trace.push_back({"1", s, Rational(1), valuation_p(Rational(1), p)});
    Polynomial rest = gp - Polynomial::monomial(gp.ring(), gp.variables(), {s * pi}, Scalar::one(gp.ring()));
    for (int i = s + 1; i <= report.d; ++i) {
      const Rational ci = c[static_cast<std::size_t>(i)];
      rest -= Polynomial::monomial(gp.ring(), gp.variables(), {i * pi}, Scalar(ci.pow(pi)));
      const Integer ip = Integer(static_cast<long>(i) * pi);
      const Integer n_i = Integer(factorial(static_cast<unsigned long>(i * pi)) /
                                  (ip * factorial(static_cast<unsigned long>(s * pi))));
      const Rational value = ci.pow(pi) * Rational(ip) * Rational(n_i);
      trace.push_back({"c_i^p (ip) n_i", i, value, valuation_p(value, p)});
    }
    Rational total(0);
    for (const auto& t : trace) total = total + t.value;
    for (const auto& [e, coef] : rest.terms()) {
      const int i = e[0];
      const Rational h_i = coef.to_rational() / Rational(static_cast<long>(p));
      const Integer q_i = Integer(factorial(static_cast<unsigned long>(i)) /
                                  factorial(static_cast<unsigned long>(s * pi)));
      const Rational value = Rational(static_cast<long>(p)) * h_i * Rational(q_i);
      trace.push_back({"p h_i q_i", i, value, valuation_p(value, p)});
      total = total + value;
    }
    if (!(total == ratio)) throw VerificationFailure("valuation trace does not sum to L(g^p)/(sp)!");

    const Valuation v = valuation_p(ratio, p);
    if (v != Valuation::finite(0)) {
      report.rejected.emplace_back(p, "v_p(L(g^p)/(sp)!) = " + v.to_string());
      continue;
    }
    report.prime = p;
    report.l_value = l_value;
    report.v_ratio = ratio;
    report.ratio_valuation = v;
    report.trace = std::move(trace);
    report.certified = true;
    break;
  }
  return report;
}

}  // namespace mathieu
