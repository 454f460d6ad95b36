#include "mathieu/prime_field.hpp"

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

ModInt::ModInt(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw DomainError("prime field modulus must be at least 2");
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  residue_ = static_cast<std::uint64_t>(r);
}

ModInt ModInt::from_integer(const Integer& value, std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("prime field modulus must be at least 2");
  Integer m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(modulus), 0, 0, &modulus);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  ModInt out;
  out.modulus_ = modulus;
  out.residue_ = 0;
  mpz_export(&out.residue_, nullptr, 1, sizeof(out.residue_), 0, 0, r.get_mpz_t());
  return out;
}

ModInt ModInt::from_rational(const Rational& value, std::uint64_t modulus) {
  const ModInt den = from_integer(value.denominator(), modulus);
  if (den.is_zero()) {
    throw DomainError("denominator of " + value.to_string() + " vanishes modulo " +
                      std::to_string(modulus));
  }
  return from_integer(value.numerator(), modulus) / den;
}

void ModInt::check_same_field(const ModInt& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw RingMismatch("mixed prime fields F_" + std::to_string(modulus_) + " and F_" +
                       std::to_string(rhs.modulus_));
  }
}

ModInt ModInt::inverse() const {
  if (residue_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(modulus_));
  // Fermat: a^(p-2)
  return pow(modulus_ - 2);
}

ModInt ModInt::pow(std::uint64_t exponent) const {
  ModInt result = *this;
  result.residue_ = 1 % modulus_;
  std::uint64_t base = residue_;
  while (exponent > 0) {
    if (exponent & 1U) result.residue_ = mul_mod(result.residue_, base, modulus_);
    base = mul_mod(base, base, modulus_);
    exponent >>= 1U;
  }
  return result;
}

ModInt& ModInt::operator+=(const ModInt& rhs) {
  check_same_field(rhs);
  residue_ = static_cast<std::uint64_t>((static_cast<u128>(residue_) + rhs.residue_) % modulus_);
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& rhs) {
  check_same_field(rhs);
  residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_
                                      : modulus_ - (rhs.residue_ - residue_);
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& rhs) {
  check_same_field(rhs);
  residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  return *this;
}

ModInt ModInt::operator-() const {
  ModInt out = *this;
  out.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  return out;
}

}  // namespace mathieu
