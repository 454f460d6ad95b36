#pragma once

// Seeded generators and independent reference computations shared by the
// unit and acceptance tests. The reference routines deliberately avoid the
// library code paths they are compared against.

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mathieu/matrix.hpp"
#include "mathieu/number_theory.hpp"
#include "mathieu/polynomial.hpp"
#include "mathieu/scalar.hpp"
#include "mathieu/variables.hpp"

namespace mathieu {

// Readable failure messages from gtest.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }

}  // namespace mathieu

namespace testsupport {

using namespace mathieu;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  // Small nonzero coefficient; fractions and imaginary parts when the ring has them.
  Scalar coefficient(const Ring& ring) {
    for (;;) {
      Scalar c = Scalar::zero(ring);
      switch (ring.kind()) {
        case RingKind::prime_field:
          c = Scalar::from_integer(ring, integer(1, static_cast<int>(ring.characteristic()) - 1));
          break;
        case RingKind::rationals:
          c = Scalar::from_rational(ring, Rational(Integer(integer(-5, 5)), Integer(integer(1, 3))));
          break;
        case RingKind::gaussian_rationals:
          c = Scalar::from_rational(ring, Rational(Integer(integer(-3, 3)), Integer(integer(1, 2)))) +
              Scalar::imaginary_unit(ring) * Scalar::from_integer(ring, integer(-2, 2));
          break;
      }
      if (!c.is_zero()) return c;
    }
  }

  Exponents exponents(std::size_t nvars, int max_total) {
    Exponents e(nvars, 0);
    int budget = integer(0, max_total);
    for (std::size_t k = 0; k < nvars && budget > 0; ++k) {
      const std::size_t i = static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1));
      const int take = integer(0, budget);
      e[i] += take;
      budget -= take;
    }
    return e;
  }

  // Random polynomial of total degree <= max_degree over the given variables.
  Polynomial polynomial(const Ring& ring, const VariablesPtr& vars, int max_degree, int max_terms) {
    Polynomial out(ring, vars);
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      out += Polynomial::monomial(ring, vars, exponents(vars->size(), max_degree), coefficient(ring));
    }
    return out;
  }

  Polynomial nonzero_polynomial(const Ring& ring, const VariablesPtr& vars, int max_degree, int max_terms) {
    for (;;) {
      Polynomial p = polynomial(ring, vars, max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  // Random polynomial in variables whose indices are listed in `active`.
  Polynomial polynomial_in(const Ring& ring, const VariablesPtr& vars, const std::vector<std::size_t>& active,
                           int max_degree, int max_terms) {
    Polynomial out(ring, vars);
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      const Exponents small = exponents(active.size(), max_degree);
      Exponents e(vars->size(), 0);
      for (std::size_t j = 0; j < active.size(); ++j) e[active[j]] = small[j];
      out += Polynomial::monomial(ring, vars, e, coefficient(ring));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

// Integer-valued helpers kept free of GMP where practical.
inline long long falling(long long n, int k) {
  long long out = 1;
  for (int j = 0; j < k; ++j) out *= (n - j);
  return out;
}

inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// L on one monomial w^a z^b by the falling-factorial rule, written without
// any library differentiation: coefficient prod b_i!/(b_i-a_i)!.
inline Polynomial reference_l_map(const Polynomial& f, const PhaseSpace& phase) {
  Polynomial out(f.ring(), phase.coordinates);
  for (const auto& [e, c] : f.terms()) {
    Exponents z(phase.n);
    Integer factor = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < phase.n; ++i) {
      const int a = e[i];
      const int b = e[phase.n + i];
      if (a > b) {
        vanishes = true;
        break;
      }
      factor *= static_cast<long>(falling(b, a));
      z[i] = b - a;
    }
    if (vanishes) continue;
    out += Polynomial::monomial(f.ring(), phase.coordinates, z, c * Scalar::from_integer(f.ring(), factor));
  }
  return out;
}

// Words in the letters z_i (multiplication) and d_i (derivation), rewritten
// to z-left d-right order by the commutation rule d_i z_i = z_i d_i + 1.
struct Letter {
  bool derivation;
  std::size_t index;
};
using Word = std::vector<Letter>;

inline std::map<std::pair<Exponents, Exponents>, long long> naive_normal_order(const Word& start, std::size_t n) {
  std::map<std::pair<Exponents, Exponents>, long long> result;
  std::vector<std::pair<Word, long long>> pending{{start, 1}};
  while (!pending.empty()) {
    auto [word, coef] = pending.back();
    pending.pop_back();
    std::size_t k = 0;
    while (k + 1 < word.size() && !(word[k].derivation && !word[k + 1].derivation)) ++k;
    if (k + 1 >= word.size()) {
      Exponents a(n, 0), b(n, 0);
      for (const auto& l : word) (l.derivation ? b : a)[l.index] += 1;
      result[{a, b}] += coef;
      continue;
    }
    Word swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    pending.push_back({swapped, coef});
    if (word[k].index == word[k + 1].index) {
      Word shorter;
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (j != k && j != k + 1) shorter.push_back(word[j]);
      }
      pending.push_back({shorter, coef});
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    it = it->second == 0 ? result.erase(it) : std::next(it);
  }
  return result;
}

// p-adic valuation of a nonzero rational by repeated division.
inline long reference_valuation(const Rational& x, unsigned long p) {
  Integer num = ::abs(x.numerator());
  Integer den = x.denominator();
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

// Constant coefficient of t^shift (t^-1 + t^(p-1))^m mod p. The binomial
// term C(m, j) carries t^(pj - m + shift).
inline long long willems_coefficient(long long p, long long m, long long shift) {
  const long long target = m - shift;
  if (target < 0 || target % p != 0) return 0;
  const long long j = target / p;
  if (j > m) return 0;
  // Lucas: C(m, j) mod p as a product of digit binomials.
  long long out = 1, mm = m, jj = j;
  while (mm > 0 || jj > 0) {
    const long long md = mm % p, jd = jj % p;
    if (jd > md) return 0;
    out = out * (binomial_ll(md, jd) % p) % p;
    mm /= p;
    jj /= p;
  }
  return out;
}

// Cofactor expansion, exponential but independent of elimination.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational out(0);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][col] * cofactor_determinant(minor);
    out = (col % 2 == 0) ? out + term : out - term;
  }
  return out;
}

// Integral of x^k over [lo, hi] for integer endpoints.
inline Rational power_integral(long k, long lo, long hi) {
  return (Rational(Integer(hi)).pow(k + 1) - Rational(Integer(lo)).pow(k + 1)) / Rational(k + 1);
}

// Moments of (1-x)^alpha (1+x)^beta on [-1, 1] by expanding the weight and
// integrating termwise; normalized by the zeroth moment.
inline std::vector<Rational> jacobi_moments_by_expansion(int alpha, int beta, int n_max) {
  std::vector<Rational> weight(static_cast<std::size_t>(alpha + beta + 1), Rational(0));
  for (int i = 0; i <= alpha; ++i) {
    for (int j = 0; j <= beta; ++j) {
      const long long c = binomial_ll(alpha, i) * binomial_ll(beta, j) * ((i % 2 == 0) ? 1 : -1);
      weight[static_cast<std::size_t>(i + j)] += Rational(static_cast<long>(c));
    }
  }
  std::vector<Rational> raw;
  for (int n = 0; n <= n_max; ++n) {
    Rational total(0);
    for (std::size_t k = 0; k < weight.size(); ++k) {
      total += weight[k] * power_integral(static_cast<long>(k) + n, -1, 1);
    }
    raw.push_back(total);
  }
  std::vector<Rational> out;
  for (const auto& r : raw) out.push_back(r / raw[0]);
  return out;
}

inline Polynomial poly(const Ring& ring, const VariablesPtr& vars, const std::vector<std::pair<Exponents, long>>& terms) {
  Polynomial out(ring, vars);
  for (const auto& [e, c] : terms) out += Polynomial::monomial(ring, vars, e, Scalar::from_integer(ring, c));
  return out;
}

}  // namespace testsupport
