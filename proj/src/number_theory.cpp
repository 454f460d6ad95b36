#include "mathieu/number_theory.hpp"

#include <array>

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

long exponent_of(Integer n, const Integer& p) {
  long count = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++count;
  }
  return count;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (d >= kTrialDivisionLimit) return miller_rabin(n);
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw DomainError("prime divisors of zero");
  Integer m = ::abs(n);
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Valuation valuation_p(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (x.is_zero()) return Valuation::infinity();
  const Integer prime(static_cast<unsigned long>(p));
  return Valuation::finite(exponent_of(x.numerator(), prime) -
                           exponent_of(x.denominator(), prime));
}

long factorial_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  long total = 0;
  for (u128 power = p; power <= n; power *= p) {
    total += static_cast<long>(n / static_cast<std::uint64_t>(power));
  }
  return total;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer falling_factorial(long n, unsigned long k) {
  Integer out = 1;
  for (unsigned long j = 0; j < k; ++j) out *= n - static_cast<long>(j);
  return out;
}

}  // namespace mathieu
