#include "mathieu/scalar.hpp"

#include "mathieu/errors.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw RingMismatch("scalar ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

template <class Op>
void combine(Scalar::Value& lhs, const Scalar::Value& rhs, const Scalar& a, const Scalar& b,
             Op op) {
  if (lhs.index() != rhs.index()) mismatch(a, b);
  std::visit(
      [&](auto& l) {
        using T = std::decay_t<decltype(l)>;
        op(l, std::get<T>(rhs));
      },
      lhs);
}

}  // namespace

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return Ring(RingKind::prime_field, p);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::rationals:
      return "q";
    case RingKind::gaussian_rationals:
      return "qi";
    case RingKind::prime_field:
      return "fp(" + std::to_string(p_) + ")";
  }
  return "?";
}

Scalar Scalar::from_integer(const Ring& ring, const Integer& value) {
  switch (ring.kind()) {
    case RingKind::rationals:
      return Scalar(Rational(value));
    case RingKind::gaussian_rationals:
      return Scalar(GaussianRational(Rational(value)));
    case RingKind::prime_field:
      return Scalar(ModInt::from_integer(value, ring.characteristic()));
  }
  throw DomainError("unknown ring");
}

Scalar Scalar::from_rational(const Ring& ring, const Rational& value) {
  switch (ring.kind()) {
    case RingKind::rationals:
      return Scalar(value);
    case RingKind::gaussian_rationals:
      return Scalar(GaussianRational(value));
    case RingKind::prime_field:
      return Scalar(ModInt::from_rational(value, ring.characteristic()));
  }
  throw DomainError("unknown ring");
}

Scalar Scalar::imaginary_unit(const Ring& ring) {
  if (ring.kind() != RingKind::gaussian_rationals) {
    throw DomainError("the imaginary unit requires the Gaussian rationals (ring qi)");
  }
  return Scalar(GaussianRational::i());
}

Scalar Scalar::parse(const Ring& ring, std::string_view text) {
  if (ring.kind() == RingKind::gaussian_rationals) return Scalar(GaussianRational::parse(text));
  return from_rational(ring, Rational::parse(text));
}

Ring Scalar::ring() const {
  return std::visit(Overloaded{
                        [](const Rational&) { return Ring::rationals(); },
                        [](const GaussianRational&) { return Ring::gaussian_rationals(); },
                        [](const ModInt& m) { return Ring(RingKind::prime_field, m.modulus()); },
                    },
                    value_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  return std::visit(Overloaded{
                        [](const Rational& r) { return r == Rational(1); },
                        [](const GaussianRational& g) { return g == GaussianRational(Rational(1)); },
                        [](const ModInt& m) { return m.residue() == 1; },
                    },
                    value_);
}

Scalar Scalar::conj() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(g->conj());
  return *this;
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& v) { return Scalar(v.inverse()); }, value_);
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (const auto* m = std::get_if<ModInt>(&value_)) return Scalar(m->pow(exponent));
  Scalar result = one(ring());
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Scalar::to_rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    if (g->im().is_zero()) return g->re();
    throw DomainError("non-real Gaussian rational " + g->to_string());
  }
  throw DomainError("prime field element has no rational value");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  combine(value_, rhs.value_, *this, rhs, [](auto& l, const auto& r) { l += r; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  combine(value_, rhs.value_, *this, rhs, [](auto& l, const auto& r) { l -= r; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  combine(value_, rhs.value_, *this, rhs, [](auto& l, const auto& r) { l *= r; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  combine(value_, rhs.value_, *this, rhs, [](auto& l, const auto& r) { l /= r; });
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

}  // namespace mathieu
