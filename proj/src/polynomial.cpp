#include "mathieu/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mathieu/errors.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : e) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- Grading

Grading::Grading(VariablesPtr vars, std::vector<int> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
  if (weights_.size() != vars_->size()) throw DomainError("grading size mismatch");
}

Grading Grading::from_weights(VariablesPtr vars, const std::map<std::string, int>& weights) {
  std::vector<int> w(vars->size(), 0);
  for (const auto& [name, weight] : weights) w[vars->require(name)] = weight;
  return Grading(std::move(vars), std::move(w));
}

Grading Grading::total_degree(VariablesPtr vars) {
  std::vector<int> w(vars->size(), 1);
  return Grading(std::move(vars), std::move(w));
}

Grading Grading::zeta_z(const PhaseSpace& phase) {
  std::vector<int> w(2 * phase.n, 1);
  std::fill(w.begin(), w.begin() + static_cast<long>(phase.n), -1);
  return Grading(phase.symbols, std::move(w));
}

Grading Grading::z_only(const PhaseSpace& phase) {
  std::vector<int> w(2 * phase.n, 1);
  std::fill(w.begin(), w.begin() + static_cast<long>(phase.n), 0);
  return Grading(phase.symbols, std::move(w));
}

long Grading::weight(const Exponents& e) const {
  long total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) total += static_cast<long>(weights_[i]) * e[i];
  return total;
}

// ------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Ring ring, VariablesPtr vars) : ring_(ring), vars_(std::move(vars)) {
  if (!vars_) throw DomainError("polynomial without a variable set");
}

Polynomial Polynomial::constant(Ring ring, VariablesPtr vars, const Scalar& value) {
  Polynomial p(ring, std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), value);
  return p;
}

Polynomial Polynomial::constant(Ring ring, VariablesPtr vars, long value) {
  return constant(ring, std::move(vars), Scalar::from_integer(ring, value));
}

Polynomial Polynomial::variable(Ring ring, VariablesPtr vars, const std::string& name) {
  Exponents e(vars->size(), 0);
  e[vars->require(name)] = 1;
  return monomial(ring, std::move(vars), std::move(e), Scalar::one(ring));
}

Polynomial Polynomial::monomial(Ring ring, VariablesPtr vars, Exponents exponents,
                                const Scalar& coefficient) {
  Polynomial p(ring, std::move(vars));
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, VariablesPtr vars,
                                  std::vector<std::pair<Exponents, Scalar>> terms) {
  Polynomial p(ring, std::move(vars));
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void Polynomial::check_exponents(const Exponents& e) const {
  if (e.size() != vars_->size()) throw DomainError("exponent vector has wrong length");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !vars_->is_laurent(i)) {
      throw DomainError("negative exponent on non-Laurent variable '" + vars_->name(i) + "'");
    }
  }
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  check_exponents(e);
  if (!(c.ring() == ring_)) {
    throw RingMismatch("coefficient in " + c.ring().name() + " for polynomial over " +
                       ring_.name());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int x) { return x == 0; }));
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (!(ring_ == rhs.ring_)) {
    throw RingMismatch("polynomial ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
  }
  if (!same_variables(vars_, rhs.vars_)) {
    throw RingMismatch("variable set mismatch: " + vars_->to_string() + " vs " +
                       rhs.vars_->to_string());
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.ring_, a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t nv = a.vars_->size();
  std::unordered_map<Exponents, Scalar, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(nv);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto& [exps, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace(exps, std::move(c));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_, vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_, vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, coef * c);
  return out;
}

Polynomial Polynomial::shifted(const Exponents& shift) const {
  if (shift.size() != vars_->size()) throw DomainError("shift has wrong length");
  Polynomial out(ring_, vars_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    out.check_exponents(s);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

Polynomial Polynomial::pow(long exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) throw DomainError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(ring_, vars_, std::move(inv), c.inverse()).pow(-exponent);
  }
  Polynomial result = one_like();
  Polynomial base = *this;
  auto k = static_cast<unsigned long>(exponent);
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const { return derivative(var, 1); }

Polynomial Polynomial::derivative(const std::string& var) const {
  return derivative(vars_->require(var), 1);
}

Polynomial Polynomial::derivative(std::size_t var, unsigned k) const {
  if (var >= vars_->size()) throw DomainError("derivative variable out of range");
  Polynomial out(ring_, vars_);
  for (const auto& [e, c] : terms_) {
    const Integer factor = falling_factorial(e[var], k);
    if (factor == 0) continue;
    Scalar coef = c * Scalar::from_integer(ring_, factor);
    if (coef.is_zero()) continue;
    Exponents d = e;
    d[var] -= static_cast<int>(k);
    out.terms_.emplace(std::move(d), std::move(coef));
  }
  return out;
}

std::map<long, Polynomial> Polynomial::homogeneous_components(const Grading& grading) const {
  if (!same_variables(grading.variables(), vars_)) {
    throw RingMismatch("grading over a different variable set");
  }
  std::map<long, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    auto [it, _] = out.try_emplace(grading.weight(e), ring_, vars_);
    it->second.terms_.emplace(e, c);
  }
  return out;
}

Degree Polynomial::grade_degree(const Grading& grading) const {
  if (!same_variables(grading.variables(), vars_)) {
    throw RingMismatch("grading over a different variable set");
  }
  Degree best;
  for (const auto& [e, c] : terms_) {
    const long w = grading.weight(e);
    if (!best || w > *best) best = w;
  }
  return best;
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& e = terms_.begin()->first;  // grlex: first term has maximal degree
  return std::accumulate(e.begin(), e.end(), 0L);
}

Degree Polynomial::degree_in(std::size_t var) const {
  Degree best;
  for (const auto& [e, c] : terms_) {
    if (!best || e[var] > *best) best = e[var];
  }
  return best;
}

bool Polynomial::is_homogeneous(const Grading& grading) const {
  return homogeneous_components(grading).size() <= 1;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  if (e.size() != vars_->size()) throw DomainError("exponent vector has wrong length");
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponents(vars_->size(), 0)); }

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings,
                                  const VariablesPtr& target) const {
  const std::size_t nv = vars_->size();
  std::vector<std::optional<Polynomial>> images(nv);
  for (const auto& [name, value] : bindings) {
    const std::size_t i = vars_->require(name);
    if (!(value.ring_ == ring_) || !same_variables(value.vars_, target)) {
      throw RingMismatch("binding for '" + name + "' lives in a different ring");
    }
    images[i] = value;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (!images[i] && target->contains(vars_->name(i))) {
      images[i] = variable(ring_, target, vars_->name(i));
    }
  }
  // Laurent variables may only be bound to invertible monomials.
  for (std::size_t i = 0; i < nv; ++i) {
    if (!vars_->is_laurent(i) || !images[i]) continue;
    const bool negative_used = std::any_of(terms_.begin(), terms_.end(),
                                           [&](const auto& t) { return t.first[i] < 0; });
    if (!negative_used) continue;
    const Polynomial& img = *images[i];
    if (img.term_count() != 1) {
      throw DomainError("Laurent variable '" + vars_->name(i) +
                        "' bound to a non-invertible polynomial");
    }
    const auto& e = img.terms_.begin()->first;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] != 0 && !target->is_laurent(j)) {
        throw DomainError("Laurent variable '" + vars_->name(i) +
                          "' bound to a non-invertible polynomial");
      }
    }
  }

  std::vector<std::map<int, Polynomial>> power_cache(nv);
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto it = power_cache[i].find(k);
    if (it != power_cache[i].end()) return it->second;
    return power_cache[i].emplace(k, images[i]->pow(k)).first->second;
  };

  Polynomial out(ring_, target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(ring_, target, c);
    for (std::size_t i = 0; i < nv; ++i) {
      if (e[i] == 0) continue;
      if (!images[i]) {
        throw DomainError("variable '" + vars_->name(i) + "' has no image in " +
                          target->to_string());
      }
      term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::embed(const VariablesPtr& target) const {
  if (same_variables(vars_, target)) return *this;
  const std::size_t nv = vars_->size();
  std::vector<std::optional<std::size_t>> where(nv);
  for (std::size_t i = 0; i < nv; ++i) where[i] = target->index_of(vars_->name(i));
  Polynomial out(ring_, target);
  for (const auto& [e, c] : terms_) {
    Exponents t(target->size(), 0);
    for (std::size_t i = 0; i < nv; ++i) {
      if (e[i] == 0) continue;
      if (!where[i]) {
        throw DomainError("variable '" + vars_->name(i) + "' does not exist in " +
                          target->to_string());
      }
      t[*where[i]] = e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

Polynomial Polynomial::conjugate() const {
  return map_coefficients([](const Scalar& c) { return c.conj(); });
}

Polynomial Polynomial::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  Polynomial out(ring_, vars_);
  for (const auto& [e, c] : terms_) {
    Scalar v = f(c);
    if (!(v.ring() == ring_)) throw RingMismatch("coefficient map changed the ring");
    if (!v.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(v));
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const VariableSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

namespace {

// Splits a coefficient into (negative?, magnitude text, needs parentheses).
struct CoefficientText {
  bool negative = false;
  std::string magnitude;
  bool is_unit = false;
};

CoefficientText describe(const Scalar& c) {
  CoefficientText out;
  if (const auto* r = std::get_if<Rational>(&c.value())) {
    out.negative = r->sign() < 0;
    const Rational m = r->abs();
    out.is_unit = m == Rational(1);
    out.magnitude = m.to_string();
  } else if (const auto* g = std::get_if<GaussianRational>(&c.value())) {
    if (g->im().is_zero()) {
      out = describe(Scalar(g->re()));
    } else if (g->re().is_zero()) {
      out.negative = g->im().sign() < 0;
      const Rational m = g->im().abs();
      out.magnitude = m == Rational(1) ? "i" : m.to_string() + "*i";
    } else {
      out.magnitude = "(" + g->to_string() + ")";
    }
  } else {
    out.magnitude = c.to_string();
    out.is_unit = c.is_one();
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const CoefficientText ct = describe(c);
    const std::string mono = monomial_to_string(*vars_, e);
    if (first) {
      if (ct.negative) out += '-';
    } else {
      out += ct.negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += ct.magnitude;
    } else if (ct.is_unit) {
      out += mono;
    } else {
      out += ct.magnitude + '*' + mono;
    }
  }
  return out;
}

}  // namespace mathieu
