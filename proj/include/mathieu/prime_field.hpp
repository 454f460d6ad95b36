#pragma once

#include <cstdint>
#include <string>

#include "mathieu/rational.hpp"

namespace mathieu {

/// Residue class modulo a prime p, carrying its modulus. Arithmetic between
/// elements of different prime fields throws RingMismatch.
class ModInt {
 public:
  /// Reduces `value` into [0, p). Does not re-check primality; use
  /// Ring::prime_field for validated construction.
  ModInt(std::int64_t value, std::uint64_t modulus);
  static ModInt from_integer(const Integer& value, std::uint64_t modulus);
  /// a/b with b invertible mod p.
  static ModInt from_rational(const Rational& value, std::uint64_t modulus);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  ModInt inverse() const;
  ModInt pow(std::uint64_t exponent) const;

  ModInt& operator+=(const ModInt& rhs);
  ModInt& operator-=(const ModInt& rhs);
  ModInt& operator*=(const ModInt& rhs);
  ModInt& operator/=(const ModInt& rhs) { return *this *= rhs.inverse(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  ModInt operator-() const;

  friend bool operator==(const ModInt&, const ModInt&) = default;

  std::string to_string() const { return std::to_string(residue_); }

 private:
  ModInt() = default;
  void check_same_field(const ModInt& rhs) const;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 2;
};

}  // namespace mathieu
