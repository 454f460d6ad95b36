#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "mathieu/gaussian_rational.hpp"
#include "mathieu/prime_field.hpp"
#include "mathieu/rational.hpp"

namespace mathieu {

enum class RingKind { rationals, gaussian_rationals, prime_field };

/// Selects the coefficient field k: Q, Q(i) or F_p.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::rationals, 0); }
  static Ring gaussian_rationals() { return Ring(RingKind::gaussian_rationals, 0); }
  /// Throws DomainError when p is not prime.
  static Ring prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  /// Short name used by the CLI: "q", "qi" or "fp(p)".
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  friend class Scalar;
  Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::uint64_t p_;
};

/// A coefficient in one of the supported fields. Mixing rings in arithmetic
/// throws RingMismatch; nothing is coerced.
class Scalar {
 public:
  using Value = std::variant<Rational, GaussianRational, ModInt>;

  explicit Scalar(Rational value) : value_(std::move(value)) {}
  explicit Scalar(GaussianRational value) : value_(std::move(value)) {}
  explicit Scalar(ModInt value) : value_(value) {}

  static Scalar zero(const Ring& ring) { return from_integer(ring, 0); }
  static Scalar one(const Ring& ring) { return from_integer(ring, 1); }
  static Scalar from_integer(const Ring& ring, const Integer& value);
  /// Throws DomainError in F_p when the denominator vanishes mod p.
  static Scalar from_rational(const Ring& ring, const Rational& value);
  /// The imaginary unit; only exists in Q(i).
  static Scalar imaginary_unit(const Ring& ring);
  /// Parses a literal of the ring: "a/b" everywhere, "a/b+c/d*i" in Q(i).
  static Scalar parse(const Ring& ring, std::string_view text);

  Ring ring() const;
  const Value& value() const { return value_; }

  bool is_zero() const;
  bool is_one() const;
  /// Complex conjugate in Q(i); identity elsewhere.
  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  /// Exact rational value; throws DomainError for non-real Gaussians and in F_p.
  Rational to_rational() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string to_string() const;

 private:
  Value value_;
};

}  // namespace mathieu
