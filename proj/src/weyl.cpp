#include "mathieu/weyl.hpp"

#include <unordered_map>

#include "mathieu/errors.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {
namespace {

struct Reordering {
  Exponents k;
  Integer coefficient;
};

// d^b x^c = sum_k prod_i C(b_i,k_i) C(c_i,k_i) k_i! x^(c-k) d^(b-k).
// With alternate = true the signs (-1)^|k| give the inverse rewrite
// x^c d^b = sum_k (-1)^|k| ... d^(b-k) x^(c-k).
std::vector<Reordering> reorderings(const Exponents& b, const Exponents& c, bool alternate) {
  std::vector<Reordering> out{{Exponents(b.size(), 0), Integer(1)}};
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int top = std::min(b[i], c[i]);
    if (top <= 0) continue;
    std::vector<Reordering> next;
    next.reserve(out.size() * static_cast<std::size_t>(top + 1));
    for (const auto& r : out) {
      for (int k = 0; k <= top; ++k) {
        const auto uk = static_cast<unsigned long>(k);
        Integer coef = r.coefficient * binomial(static_cast<unsigned long>(b[i]), uk) *
                       binomial(static_cast<unsigned long>(c[i]), uk) * factorial(uk);
        if (alternate && (k % 2 == 1)) coef = -coef;
        Reordering nr{r.k, coef};
        nr.k[i] = k;
        next.push_back(std::move(nr));
      }
    }
    out = std::move(next);
  }
  return out;
}

Exponents zeros(std::size_t n) { return Exponents(n, 0); }

void require_phase(const WeylElement& w, const PhaseSpace& phase) {
  if (!same_variables(w.coordinates(), phase.coordinates)) {
    throw RingMismatch("operator does not act on the phase-space coordinates");
  }
}

void require_symbols(const Polynomial& p, const PhaseSpace& phase) {
  if (!same_variables(p.variables(), phase.symbols)) {
    throw RingMismatch("expected a polynomial in " + phase.symbols->to_string());
  }
}

}  // namespace

std::string derivation_name(const std::string& coordinate) {
  if (coordinate.size() > 1 && coordinate.front() == 'z') return "d" + coordinate.substr(1);
  return "d_" + coordinate;
}

VariablesPtr operator_variables(const VariablesPtr& coordinates) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < coordinates->size(); ++i) {
    if (coordinates->is_laurent(i)) {
      throw DomainError("operators over Laurent coordinates are not supported");
    }
    names.push_back(coordinates->name(i));
  }
  for (std::size_t i = 0; i < coordinates->size(); ++i) {
    names.push_back(derivation_name(coordinates->name(i)));
  }
  return VariableSet::make(names);
}

// ------------------------------------------------------------ WeylElement

WeylElement::WeylElement(Ring ring, VariablesPtr coordinates)
    : ring_(ring), coords_(std::move(coordinates)) {}

WeylElement WeylElement::scalar(Ring ring, VariablesPtr coordinates, const Scalar& c) {
  const std::size_t n = coordinates->size();
  return normal_ordered(ring, std::move(coordinates), zeros(n), zeros(n), c);
}

WeylElement WeylElement::scalar(Ring ring, VariablesPtr coordinates, long c) {
  return scalar(ring, std::move(coordinates), Scalar::from_integer(ring, c));
}

WeylElement WeylElement::coordinate(Ring ring, VariablesPtr coordinates, const std::string& name) {
  Exponents a = zeros(coordinates->size());
  a[coordinates->require(name)] = 1;
  const std::size_t n = coordinates->size();
  return normal_ordered(ring, std::move(coordinates), std::move(a), zeros(n), Scalar::one(ring));
}

WeylElement WeylElement::derivation(Ring ring, VariablesPtr coordinates, const std::string& name) {
  Exponents b = zeros(coordinates->size());
  b[coordinates->require(name)] = 1;
  const std::size_t n = coordinates->size();
  return normal_ordered(ring, std::move(coordinates), zeros(n), std::move(b), Scalar::one(ring));
}

WeylElement WeylElement::multiplication(const Polynomial& p) {
  WeylElement out(p.ring(), p.variables());
  const std::size_t n = p.variables()->size();
  for (const auto& [e, c] : p.terms()) out.add_term(e, zeros(n), c);
  return out;
}

WeylElement WeylElement::normal_ordered(Ring ring, VariablesPtr coordinates, Exponents a,
                                        Exponents b, const Scalar& c) {
  WeylElement out(ring, std::move(coordinates));
  out.add_term(a, b, c);
  return out;
}

WeylElement WeylElement::from_right_normal(const Polynomial& p, const VariablesPtr& coordinates) {
  const VariablesPtr ops = operator_variables(coordinates);
  const Polynomial q = p.embed(ops);
  const std::size_t n = coordinates->size();
  WeylElement out(p.ring(), coordinates);
  for (const auto& [e, c] : q.terms()) {
    out.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(n)),
                 Exponents(e.begin() + static_cast<long>(n), e.end()), c);
  }
  return out;
}

void WeylElement::add_term(const Exponents& a, const Exponents& b, const Scalar& c) {
  const std::size_t n = coords_->size();
  if (a.size() != n || b.size() != n) throw DomainError("Weyl monomial has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 0 || b[i] < 0) throw DomainError("negative exponent in a Weyl monomial");
  }
  if (!(c.ring() == ring_)) throw RingMismatch("coefficient ring mismatch in Weyl element");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WeylElement::check_compatible(const WeylElement& rhs) const {
  if (!(ring_ == rhs.ring_) || !same_variables(coords_, rhs.coords_)) {
    throw RingMismatch("Weyl elements over different rings or coordinates");
  }
}

bool WeylElement::is_constant_coefficient() const {
  for (const auto& [key, c] : terms_) {
    for (int x : key.first) {
      if (x != 0) return false;
    }
  }
  return true;
}

Degree WeylElement::order() const {
  Degree best;
  for (const auto& [key, c] : terms_) {
    long d = 0;
    for (int x : key.second) d += x;
    if (!best || d < *best) best = d;
  }
  return best;
}

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
  check_compatible(rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
  check_compatible(rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  a.check_compatible(b);
  const std::size_t n = a.coords_->size();
  WeylElement out(a.ring_, a.coords_);
  // (x^a1 d^b1)(x^a2 d^b2) = x^a1 (d^b1 x^a2) d^b2
  for (const auto& [k1, c1] : a.terms_) {
    for (const auto& [k2, c2] : b.terms_) {
      const Scalar c = c1 * c2;
      for (const auto& r : reorderings(k1.second, k2.first, false)) {
        Exponents xa(n), db(n);
        for (std::size_t i = 0; i < n; ++i) {
          xa[i] = k1.first[i] + k2.first[i] - r.k[i];
          db[i] = k1.second[i] - r.k[i] + k2.second[i];
        }
        out.add_term(xa, db, c * Scalar::from_integer(a.ring_, r.coefficient));
      }
    }
  }
  return out;
}

WeylElement WeylElement::operator-() const { return scaled(-Scalar::one(ring_)); }

WeylElement WeylElement::scaled(const Scalar& c) const {
  WeylElement out(ring_, coords_);
  for (const auto& [key, coef] : terms_) out.add_term(key.first, key.second, coef * c);
  return out;
}

WeylElement WeylElement::pow(unsigned m) const {
  WeylElement result = scalar(ring_, coords_, 1);
  WeylElement base = *this;
  while (m > 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m > 0) base = base * base;
  }
  return result;
}

Polynomial WeylElement::apply(const Polynomial& f) const {
  if (!(f.ring() == ring_) || !same_variables(f.variables(), coords_)) {
    throw RingMismatch("operator applied to a polynomial in other variables");
  }
  const std::size_t n = coords_->size();
  std::unordered_map<Exponents, Scalar, ExponentsHash> acc;
  Exponents e(n);
  for (const auto& [key, c] : terms_) {
    for (const auto& [fe, fc] : f.terms()) {
      Integer factor = 1;
      for (std::size_t i = 0; i < n && factor != 0; ++i) {
        factor *= falling_factorial(fe[i], static_cast<unsigned long>(key.second[i]));
      }
      if (factor == 0) continue;
      const Scalar coef = c * fc * Scalar::from_integer(ring_, factor);
      if (coef.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = fe[i] - key.second[i] + key.first[i];
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, coef);
      } else {
        it->second += coef;
      }
    }
  }
  std::vector<std::pair<Exponents, Scalar>> terms(acc.begin(), acc.end());
  return Polynomial::from_terms(ring_, coords_, std::move(terms));
}

Polynomial WeylElement::to_polynomial() const {
  const VariablesPtr ops = operator_variables(coords_);
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [key, c] : terms_) {
    Exponents e = key.first;
    e.insert(e.end(), key.second.begin(), key.second.end());
    terms.emplace_back(std::move(e), c);
  }
  return Polynomial::from_terms(ring_, ops, std::move(terms));
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.ring_ == b.ring_ && same_variables(a.coords_, b.coords_) && a.terms_ == b.terms_;
}

WeylElement compose(const WeylElement& first, const WeylElement& second) { return first * second; }

Polynomial apply(const WeylElement& w, const Polynomial& f) { return w.apply(f); }

// ------------------------------------------------------------ symbol maps

Polynomial left_symbol(const WeylElement& w, const PhaseSpace& phase) {
  require_phase(w, phase);
  const std::size_t n = phase.n;
  std::vector<std::pair<Exponents, Scalar>> terms;
  // z^a d^b = sum_k (-1)^|k| ... d^(b-k) z^(a-k)
  for (const auto& [key, c] : w.terms()) {
    for (const auto& r : reorderings(key.first, key.second, true)) {
      Exponents e(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = key.second[i] - r.k[i];
        e[n + i] = key.first[i] - r.k[i];
      }
      terms.emplace_back(std::move(e), c * Scalar::from_integer(w.ring(), r.coefficient));
    }
  }
  return Polynomial::from_terms(w.ring(), phase.symbols, std::move(terms));
}

WeylElement left_symbol_inverse(const Polynomial& symbol, const PhaseSpace& phase) {
  require_symbols(symbol, phase);
  const std::size_t n = phase.n;
  WeylElement out(symbol.ring(), phase.coordinates);
  for (const auto& [e, c] : symbol.terms()) {
    const Exponents d(e.begin(), e.begin() + static_cast<long>(n));
    const Exponents z(e.begin() + static_cast<long>(n), e.end());
    out += WeylElement::normal_ordered(symbol.ring(), phase.coordinates, zeros(n), d, c) *
           WeylElement::normal_ordered(symbol.ring(), phase.coordinates, z, zeros(n),
                                       Scalar::one(symbol.ring()));
  }
  return out;
}

Polynomial right_symbol(const WeylElement& w, const PhaseSpace& phase) {
  require_phase(w, phase);
  const std::size_t n = phase.n;
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [key, c] : w.terms()) {
    Exponents e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = key.second[i];
      e[n + i] = key.first[i];
    }
    terms.emplace_back(std::move(e), c);
  }
  return Polynomial::from_terms(w.ring(), phase.symbols, std::move(terms));
}

WeylElement right_symbol_inverse(const Polynomial& symbol, const PhaseSpace& phase) {
  require_symbols(symbol, phase);
  const std::size_t n = phase.n;
  WeylElement out(symbol.ring(), phase.coordinates);
  for (const auto& [e, c] : symbol.terms()) {
    out += WeylElement::normal_ordered(symbol.ring(), phase.coordinates,
                                       Exponents(e.begin() + static_cast<long>(n), e.end()),
                                       Exponents(e.begin(), e.begin() + static_cast<long>(n)), c);
  }
  return out;
}

Polynomial kill_symbols(const Polynomial& f, const PhaseSpace& phase) {
  require_symbols(f, phase);
  const std::size_t n = phase.n;
  std::vector<std::pair<Exponents, Scalar>> terms;
  for (const auto& [e, c] : f.terms()) {
    bool has_symbol = false;
    for (std::size_t i = 0; i < n; ++i) has_symbol = has_symbol || e[i] != 0;
    if (!has_symbol) terms.emplace_back(Exponents(e.begin() + static_cast<long>(n), e.end()), c);
  }
  return Polynomial::from_terms(f.ring(), phase.coordinates, std::move(terms));
}

Polynomial l_map_via_symbols(const Polynomial& f, const PhaseSpace& phase) {
  return kill_symbols(right_symbol(left_symbol_inverse(f, phase), phase), phase);
}

// -------------------------------------------------------- DiffOperatorSpec

DiffOperatorSpec::DiffOperatorSpec(std::vector<WeylElement> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw DomainError("empty operator set");
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    if (!(operators_[i].ring() == operators_[0].ring()) ||
        !same_variables(operators_[i].coordinates(), operators_[0].coordinates())) {
      throw RingMismatch("operators act on different rings");
    }
    for (std::size_t j = i + 1; j < operators_.size(); ++j) {
      if (!(operators_[i] * operators_[j] == operators_[j] * operators_[i])) {
        throw DomainError("operators " + operators_[i].to_string() + " and " +
                          operators_[j].to_string() + " do not commute");
      }
    }
  }
}

DiffOperatorSpec DiffOperatorSpec::affine_shifts(const VariablesPtr& coordinates,
                                                 const std::vector<std::string>& differentiated,
                                                 const std::vector<Polynomial>& shifts) {
  if (differentiated.size() != shifts.size()) throw DomainError("one shift per derivation");
  std::vector<WeylElement> ops;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const Ring ring = shifts[i].ring();
    ops.push_back(WeylElement::derivation(ring, coordinates, differentiated[i]) -
                  WeylElement::multiplication(shifts[i].embed(coordinates)));
  }
  return DiffOperatorSpec(std::move(ops));
}

Polynomial DiffOperatorSpec::apply(const std::vector<Polynomial>& witness) const {
  if (witness.size() != operators_.size()) throw DomainError("one witness per operator");
  Polynomial out(ring(), coordinates());
  for (std::size_t i = 0; i < witness.size(); ++i) out += operators_[i].apply(witness[i]);
  return out;
}

}  // namespace mathieu
