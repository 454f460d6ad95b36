#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/rational.hpp"

namespace mathieu {

/// Deterministic primality: trial division below 10^6, Miller-Rabin with
/// the 12 first prime bases (exact for all 64-bit inputs) above.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Distinct prime divisors of |n| in increasing order (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long value) { return Valuation(value); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  long value() const { return *value_; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(a.value() + b.value());
  }
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value() <=> b.value();
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  Valuation() = default;
  explicit Valuation(long value) : value_(value) {}
  std::optional<long> value_;
};

/// v_p(x) = (exponent of p in the numerator) - (exponent in the denominator).
/// Throws DomainError when p is not prime.
Valuation valuation_p(const Rational& x, std::uint64_t p);

/// v_p(n!) by Legendre's formula sum_{k>=1} floor(n / p^k).
long factorial_valuation(std::uint64_t n, std::uint64_t p);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
/// n (n-1) ... (n-k+1); n may be negative (Laurent exponents).
Integer falling_factorial(long n, unsigned long k);

}  // namespace mathieu
