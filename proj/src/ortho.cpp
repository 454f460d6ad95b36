#include "mathieu/ortho.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mathieu/errors.hpp"
#include "mathieu/matrix.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {
namespace {

using Family = WeightSpec::Family;

// Legendre is Jacobi(0, 0) everywhere except in its name.
WeightSpec effective(const WeightSpec& w) {
  return w.family == Family::legendre ? WeightSpec{Family::jacobi, 0, 0} : w;
}

Ring q() { return Ring::rationals(); }

VariablesPtr single(const std::string& var) { return VariableSet::make(std::vector<std::string>{var}); }

Polynomial constant(const VariablesPtr& vars, const Rational& c) {
  return Polynomial::constant(q(), vars, Scalar(c));
}

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

// Polynomial part of the weight; the exponential factor is handled apart.
Polynomial polynomial_weight(const WeightSpec& w, const VariablesPtr& vars) {
  Polynomial out = constant(vars, 1);
  switch (w.family) {
    case Family::laguerre: return singular_factor(q(), vars, 0).pow(w.alpha);
    case Family::jacobi:
      return singular_factor(q(), vars, 1).pow(w.alpha) * singular_factor(q(), vars, 2).pow(w.beta);
    default: return out;
  }
}

// Derivative of the exponent of the exponential factor.
Polynomial exponent_derivative(const WeightSpec& w, const VariablesPtr& vars) {
  switch (w.family) {
    case Family::hermite: return Polynomial::variable(q(), vars, vars->name(0)).scaled(Scalar(Rational(-2)));
    case Family::laguerre: return constant(vars, -1);
    default: return Polynomial(q(), vars);
  }
}

Scalar lift(const Ring& ring, const Rational& r) { return Scalar::from_rational(ring, r); }

Polynomial lift(const Ring& ring, const Polynomial& p) {
  if (p.ring() == ring) return p;
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, lift(ring, c.to_rational()));
  return Polynomial::from_terms(ring, p.variables(), std::move(terms));
}

}  // namespace

// ------------------------------------------------------------ WeightSpec

WeightSpec WeightSpec::laguerre(int alpha) {
  if (alpha < 0) throw DomainError("Laguerre parameter must be a non-negative integer");
  return {Family::laguerre, alpha, 0};
}

WeightSpec WeightSpec::jacobi(int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw DomainError("Jacobi parameters must be non-negative integers");
  return {Family::jacobi, alpha, beta};
}

WeightSpec WeightSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  std::string head = s;
  std::vector<int> params;
  if (auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw DomainError("malformed weight '" + text + "'");
    head = s.substr(0, open);
    std::stringstream in(s.substr(open + 1, s.size() - open - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw DomainError("malformed weight parameter '" + item + "'");
      }
    }
  }
  auto want = [&](std::size_t count) {
    if (params.size() > count) throw DomainError("too many parameters for " + head);
    params.resize(count, 0);
  };
  if (head == "hermite") { want(0); return hermite(); }
  if (head == "laguerre") { want(1); return laguerre(params[0]); }
  if (head == "jacobi") { want(2); return jacobi(params[0], params[1]); }
  if (head == "uniform01" || head == "uniform") { want(0); return uniform01(); }
  if (head == "legendre") { want(0); return legendre(); }
  throw DomainError("unknown weight family '" + text + "'");
}

std::string WeightSpec::name() const {
  switch (family) {
    case Family::hermite: return "hermite";
    case Family::laguerre: return "laguerre(" + std::to_string(alpha) + ")";
    case Family::jacobi: return "jacobi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    case Family::uniform01: return "uniform01";
    case Family::legendre: return "legendre";
  }
  return "?";
}

// ------------------------------------------------------------ moments

MomentFunctional::MomentFunctional(WeightSpec weight, std::vector<Rational> moments)
    : weight_(weight), moments_(std::move(moments)) {
  if (moments_.empty() || !(moments_[0] == Rational(1))) {
    throw DomainError("moment sequences are normalized to mu_0 = 1");
  }
}

const Rational& MomentFunctional::operator[](std::size_t n) const {
  if (n >= moments_.size()) {
    throw DomainError("moment " + std::to_string(n) + " not available (have " +
                      std::to_string(moments_.size()) + ")");
  }
  return moments_[n];
}

MomentFunctional moments(const WeightSpec& weight, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  const WeightSpec w = effective(weight);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  // Jacobi: x = 2s - 1 turns the integral into Beta integrals
  // B(j+beta+1, alpha+1) = (j+beta)! alpha! / (j+beta+alpha+1)!; the common
  // power of two cancels against mu_0.
  auto jacobi_raw = [&](long n) {
    Rational total(0);
    for (long j = 0; j <= n; ++j) {
      Rational term(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)));
      term = term * Rational(Integer(Integer(1) << static_cast<unsigned>(j)));
      if ((n - j) % 2 == 1) term = -term;
      term = term * fact(j + w.beta) * fact(w.alpha) / fact(j + w.beta + w.alpha + 1);
      total = total + term;
    }
    return total;
  };
  const Rational jacobi_mu0 = w.family == Family::jacobi ? jacobi_raw(0) : Rational(1);
  for (long n = 0; n <= n_max; ++n) {
    switch (w.family) {
      case Family::hermite:
        if (n % 2 == 1) {
          out.emplace_back(0);
        } else {
          const long k = n / 2;
          out.push_back(fact(2 * k) / (Rational(Integer(Integer(1) << static_cast<unsigned>(2 * k))) * fact(k)));
        }
        break;
      case Family::laguerre: out.push_back(fact(n + w.alpha) / fact(w.alpha)); break;
      case Family::uniform01: out.push_back(Rational(1, n + 1)); break;
      case Family::jacobi: out.push_back(jacobi_raw(n) / jacobi_mu0); break;
      case Family::legendre: break;
    }
  }
  return MomentFunctional(weight, std::move(out));
}

Scalar integrate(const Polynomial& f, const std::vector<MomentFunctional>& factors) {
  if (f.variables()->size() != factors.size()) {
    throw DomainError("need one moment functional per variable");
  }
  Scalar total = Scalar::zero(f.ring());
  for (const auto& [e, c] : f.terms()) {
    Rational weight(1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0) throw DomainError("cannot integrate a negative power");
      weight = weight * factors[k][static_cast<std::size_t>(e[k])];
    }
    total += c * lift(f.ring(), weight);
  }
  return total;
}

Scalar integrate(const Polynomial& f, const MomentFunctional& m) {
  return integrate(f, std::vector<MomentFunctional>{m});
}

Scalar inner_product(const Polynomial& f, const Polynomial& g,
                     const std::vector<MomentFunctional>& factors) {
  return integrate(f * g.conjugate(), factors);
}

Scalar inner_product(const Polynomial& f, const Polynomial& g, const MomentFunctional& m) {
  return inner_product(f, g, std::vector<MomentFunctional>{m});
}

// ------------------------------------------------------------ families

const Polynomial& OrthFamily::at(const Exponents& a) const {
  auto it = members.find(a);
  if (it == members.end()) throw DomainError("family has no member of that index");
  return it->second;
}

OrthFamily gram_schmidt(const MomentFunctional& m, int d_max, const std::string& var) {
  if (d_max < 0) throw DomainError("d_max must be non-negative");
  if (m.size() < static_cast<std::size_t>(2 * d_max)) {
    throw DomainError("Gram-Schmidt to degree " + std::to_string(d_max) + " needs " +
                      std::to_string(2 * d_max) + " moments");
  }
  const VariablesPtr vars = single(var);
  OrthFamily out{vars, {}, {}, std::nullopt};
  const Ring ring = q();
  for (int d = 0; d <= d_max; ++d) {
    const auto n = static_cast<std::size_t>(d);
    ScalarMatrix h = scalar_matrix(ring, n, n);
    std::vector<Scalar> rhs;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) h(j, k) = Scalar(m[j + k]);
      rhs.push_back(-Scalar(m[n + j]));
    }
    if (n > 0 && determinant(h).is_zero()) {
      throw DomainError("singular Hankel system at degree " + std::to_string(d));
    }
    const auto c = solve(h, rhs);
    if (!c) throw DomainError("singular Hankel system at degree " + std::to_string(d));
    std::vector<std::pair<Exponents, Scalar>> terms{{Exponents{d}, Scalar::one(ring)}};
    for (std::size_t k = 0; k < n; ++k) terms.emplace_back(Exponents{static_cast<int>(k)}, (*c)[k]);
    out.members.emplace(Exponents{d}, Polynomial::from_terms(ring, vars, std::move(terms)));
  }
  return out;
}

Polynomial rodrigues_generator(const WeightSpec& weight, const VariablesPtr& vars) {
  const WeightSpec w = effective(weight);
  switch (w.family) {
    case Family::hermite: return constant(vars, 1);
    case Family::laguerre: return singular_factor(q(), vars, 0);
    case Family::jacobi: return singular_factor(q(), vars, 1) * singular_factor(q(), vars, 2);
    case Family::uniform01: return singular_factor(q(), vars, 0) * singular_factor(q(), vars, 1);
    case Family::legendre: break;
  }
  throw DomainError("unreachable weight family");
}

Rational rodrigues_constant(const WeightSpec& weight, int a) {
  if (a < 0) throw DomainError("negative degree");
  const WeightSpec w = effective(weight);
  const Rational sign = a % 2 == 0 ? Rational(1) : Rational(-1);
  switch (w.family) {
    case Family::hermite: return sign;
    case Family::laguerre: return Rational(1) / fact(a);
    case Family::jacobi:
      return sign / (Rational(Integer(Integer(1) << static_cast<unsigned>(a))) * fact(a));
    case Family::uniform01: return sign / fact(a);
    case Family::legendre: break;
  }
  throw DomainError("unreachable weight family");
}

TwistedRational log_derivative(const WeightSpec& weight, const VariablesPtr& vars) {
  const WeightSpec w = effective(weight);
  const Polynomial x = Polynomial::variable(q(), vars, vars->name(0));
  switch (w.family) {
    case Family::hermite: return TwistedRational(x.scaled(Scalar(Rational(-2))));
    case Family::laguerre:
      // alpha/x - 1 = (alpha - x)/x
      return TwistedRational(constant(vars, w.alpha) - x, {1, 0, 0});
    case Family::jacobi:
      // -alpha/(1-x) + beta/(1+x) = (-alpha(1+x) + beta(1-x)) / ((1-x)(1+x))
      return TwistedRational(singular_factor(q(), vars, 2).scaled(Scalar(Rational(-w.alpha))) +
                                 singular_factor(q(), vars, 1).scaled(Scalar(Rational(w.beta))),
                             {0, 1, 1});
    case Family::uniform01: return TwistedRational(Polynomial(q(), vars));
    case Family::legendre: break;
  }
  throw DomainError("unreachable weight family");
}

Polynomial rodrigues(const WeightSpec& weight, int a, const std::string& var) {
  if (a < 0) throw DomainError("negative degree");
  const WeightSpec w = effective(weight);
  const VariablesPtr vars = single(var);
  // w = e^E * W with W polynomial: d(e^E P) = e^E (P' + E' P).
  const Polynomial e_prime = exponent_derivative(w, vars);
  Polynomial p = polynomial_weight(w, vars) * rodrigues_generator(w, vars).pow(a);
  for (int k = 0; k < a; ++k) p = p.derivative(0) + e_prime * p;
  TwistedRational::Powers divide_out{0, 0, 0};
  if (w.family == Family::laguerre) divide_out = {w.alpha, 0, 0};
  if (w.family == Family::jacobi) divide_out = {0, w.alpha, w.beta};
  return TwistedRational(p, divide_out).to_polynomial().scaled(Scalar(rodrigues_constant(w, a)));
}

TwistedRational lambda_power(const WeightSpec& weight, int a, int m, const std::string& var) {
  if (a < 0 || m < 0) throw DomainError("negative degree or power");
  const VariablesPtr vars = single(var);
  const TwistedRational ld = log_derivative(weight, vars);
  TwistedRational h(rodrigues_generator(weight, vars).pow(a));
  for (int k = 0; k < m; ++k) h = (h.derivative() + ld * h).reduced();
  return h.reduced();
}

OrthFamily rodrigues_family(const WeightSpec& weight, int d_max, const std::string& var) {
  const VariablesPtr vars = single(var);
  OrthFamily out{vars, {}, {}, rodrigues_generator(weight, vars)};
  for (int a = 0; a <= d_max; ++a) {
    out.members.emplace(Exponents{a}, rodrigues(weight, a, var));
    out.constants.emplace(Exponents{a}, rodrigues_constant(weight, a));
  }
  return out;
}

OrthFamily tensor_family(const std::vector<OrthFamily>& families) {
  if (families.empty()) throw DomainError("empty tensor product");
  std::vector<VariableSet::Variable> vars;
  for (const auto& fam : families) {
    for (std::size_t k = 0; k < fam.variables->size(); ++k) {
      const auto& v = (*fam.variables)[k];
      for (const auto& seen : vars) {
        if (seen.name == v.name) throw DomainError("variable " + v.name + " used by two factors");
      }
      vars.push_back(v);
    }
  }
  const VariablesPtr all = VariableSet::make(vars);
  OrthFamily out{all, {}, {}, std::nullopt};
  bool with_constants = true;
  for (const auto& fam : families) with_constants = with_constants && !fam.constants.empty();

  out.members.emplace(Exponents{}, Polynomial::constant(q(), all, 1));
  if (with_constants) out.constants.emplace(Exponents{}, Rational(1));
  for (const auto& fam : families) {
    std::map<Exponents, Polynomial> members;
    std::map<Exponents, Rational> constants;
    for (const auto& [a, p] : out.members) {
      for (const auto& [b, u] : fam.members) {
        Exponents ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        members.emplace(ab, p * lift(p.ring(), u).embed(all));
        if (with_constants) constants.emplace(ab, out.constants.at(a) * fam.constants.at(b));
      }
    }
    out.members = std::move(members);
    out.constants = std::move(constants);
  }
  return out;
}

std::vector<RouteComparison> compare_routes(const WeightSpec& weight, int d_max,
                                            const std::string& var) {
  const OrthFamily monic = gram_schmidt(moments(weight, 2 * d_max), d_max, var);
  std::vector<RouteComparison> out;
  for (int d = 0; d <= d_max; ++d) {
    RouteComparison row{d, rodrigues(weight, d, var),
                        lambda_power(weight, d, d, var)
                            .to_polynomial()
                            .scaled(Scalar(rodrigues_constant(weight, d))),
                        monic.at(Exponents{d}), false, std::nullopt};
    row.rodrigues_equals_lambda = row.rodrigues == row.lambda_route;
    const Scalar lead = row.rodrigues.coefficient(Exponents{d});
    if (!lead.is_zero() && row.rodrigues == row.monic.scaled(lead)) row.scale = lead.to_rational();
    out.push_back(std::move(row));
  }
  return out;
}

ImPrimeMembership im_prime_membership(const Polynomial& f, const OrthFamily& family,
                                      const std::vector<MomentFunctional>& factors) {
  if (!same_variables(f.variables(), family.variables)) {
    throw RingMismatch("polynomial and family use different variables");
  }
  const Ring ring = f.ring();
  ImPrimeMembership out{false, Scalar::zero(ring), Scalar::zero(ring), {}, "assumed"};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& [lead_exp, lead_coef] = *rest.terms().begin();
    auto it = family.members.find(lead_exp);
    if (it == family.members.end()) {
      throw DomainError("family does not reach the degree of " + f.to_string());
    }
    const Polynomial u = lift(ring, it->second);
    const Scalar c = lead_coef / u.coefficient(lead_exp);
    out.expansion.emplace(lead_exp, c);
    rest -= u.scaled(c);
  }
  const Exponents zero(family.variables->size(), 0);
  if (auto it = out.expansion.find(zero); it != out.expansion.end()) {
    out.f0 = it->second * lift(ring, family.at(zero)).constant_term();
  }
  out.moment_value = integrate(f, factors);
  if (!(out.f0 == out.moment_value)) {
    throw VerificationFailure("basis coefficient " + out.f0.to_string() + " differs from <f,1> = " +
                              out.moment_value.to_string());
  }
  out.member = out.f0.is_zero();
  return out;
}

Rational hankel_determinant(const MomentFunctional& m, int d) {
  if (d < 0) throw DomainError("negative Hankel size");
  const auto n = static_cast<std::size_t>(d + 1);
  ScalarMatrix h = scalar_matrix(q(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Scalar(m[i + j]);
  }
  return determinant(h).to_rational();
}

bool hankel_nonsingular(const MomentFunctional& m, int d) { return !hankel_determinant(m, d).is_zero(); }

}  // namespace mathieu
