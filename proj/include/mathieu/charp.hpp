#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/image_map.hpp"
#include "mathieu/mathieu_harness.hpp"
#include "mathieu/number_theory.hpp"

namespace mathieu {

/// F_p[w_1..w_n][z_1..z_n] with the operators d/dz_i - w_i.
struct CharPProblem {
  std::uint64_t p = 2;
  std::size_t n = 1;
  PhaseSpace phase;
  Ring ring = Ring::rationals();

  static CharPProblem make(std::uint64_t p, std::size_t n);
};

/// A monomial ideal of F_p[w_1..w_n]; generators are w-exponent vectors.
struct IdealSpec {
  std::string name;
  std::vector<Exponents> generators;

  /// I = (w_1, ..., w_n).
  static IdealSpec i_ideal(std::size_t n);
  /// J = (w_1^p, ..., w_n^p).
  static IdealSpec j_ideal(std::size_t n, std::uint64_t p);
  std::string to_string() const;
};

/// Every term's w-part is divisible by a generator, i.e. every coefficient
/// of f as a polynomial in z lies in the ideal. f lives over phase.symbols.
bool monomial_ideal_member(const Polynomial& f, const IdealSpec& ideal, const PhaseSpace& phase);

/// Coefficients of f as a polynomial in z over F_p[w]: z-exponent ->
/// coefficient (over phase.symbols, free of z).
std::map<Exponents, Polynomial> z_coefficients(const Polynomial& f, const PhaseSpace& phase);

struct SufficientWitness {
  bool found = false;
  std::vector<Polynomial> witness;  // sum_i (d/dz_i - w_i) h_i = b
  std::string reason;               // why it declined
};

/// When every coefficient of b lies in J, assembles h from the blocks
/// w_i^p z^a = (d_i - w_i)^p (-z^a). Found witnesses are verified.
SufficientWitness sufficient_membership(const Polynomial& b, const CharPProblem& prob);

/// For w1 P + w2 Q = 0 returns g with P = w2 g, Q = -w1 g (n = 2).
Polynomial koszul_solve(const Polynomial& p, const Polynomial& q, const PhaseSpace& phase);

struct DescentWitness {
  /// z-degree of b; nullopt when b = 0.
  Degree d;
  Polynomial g_top;   // g_{d+2}
  Polynomial g_next;  // g_{d+1}
  Polynomial b_top;   // b_d
  /// -w1 (p_d + d2 g_{d+1}) - w2 (q_d - d1 g_{d+1}); equals b_top.
  Polynomial identity_rhs;
  bool identity_holds = false;
  bool top_in_i = false;
};

/// n = 2. Given b = (d1 - w1) p + (d2 - w2) q with p, q of z-degree at most
/// deg b + 2, descends through the Koszul relations in degrees d+2 and d+1
/// and writes b_d as an element of I explicitly.
DescentWitness crucial_lemma_descent(const Polynomial& b, const Polynomial& p_wit,
                                     const Polynomial& q_wit, const CharPProblem& prob);

struct Theorem51Check {
  int m = 0;
  bool coefficients_in_j = false;
  bool witness_verified = false;
};

struct Theorem51Report {
  bool premise = false;  // every f_a^p in I
  std::vector<std::string> premise_failures;
  bool f_p2_in_j = false;  // every f_a^{p^2}-coefficient of f^{p^2} in J
  std::vector<Theorem51Check> checks;  // m = p^2, p^2+1, p^2+2
  bool passed = false;
};

Theorem51Report theorem51_pipeline(const Polynomial& f, const Polynomial& g, const CharPProblem& prob);

/// f = t^-1 + t^(p-1) over F_p.
struct WillemsReport {
  std::uint64_t p = 0;
  int k_max = 0;
  int m_max = 0;  // p^k_max - 1
  bool constant_terms_vanish = false;
  std::optional<int> first_nonzero_constant;
  /// m with a nonzero constant coefficient of t^-1 f^m.
  std::vector<int> violations;
  std::vector<int> expected;  // p^k - 1
  bool expected_all_nonzero = false;
  /// Violations not of the form p^k - 1 (recorded as data).
  std::vector<int> other_violations;
};

WillemsReport willems_scan(std::uint64_t p, int k_max);

struct Example12Report {
  std::uint64_t p = 0;
  int bound = 0;
  std::vector<std::string> one_witness;  // d/dz(z) = 1
  bool one_in_image = false;
  /// d/dz(z^k) for k = 0..bound.
  std::vector<std::pair<int, std::string>> images;
  bool target_in_span = true;  // z^(p-1)
  OnePropertyProbe probe;
  bool refuted = false;
};

/// Default bound 4p.
Example12Report example12_refutation(std::uint64_t p, std::optional<int> bound = {});

struct FrobeniusReport {
  std::uint64_t p = 0;
  int s = 0;
  Polynomial remainder;  // g^p - u^{sp} - sum c_i^p u^{ip}
  std::map<int, Integer> h;  // remainder = p sum h_i u^i
  bool divisible = false;
};

/// g = u^s + sum_{i>s} c_i u^i with integer c_i, one variable, over Q.
FrobeniusReport frobenius_expansion_check(const Polynomial& g, std::uint64_t p);

struct ValuationSummand {
  std::string label;  // "1", "c_i^p (ip) n_i", "p h_i q_i"
  int index = 0;
  Rational value;
  Valuation valuation;
};

struct Lemma81Report {
  Polynomial normalized;  // g divided by its lowest coefficient
  int s = 0;
  int d = 0;
  std::vector<std::pair<std::uint64_t, std::string>> rejected;
  std::optional<std::uint64_t> prime;
  Rational l_value;  // L(g^p)
  Rational v_ratio;  // L(g^p) / (sp)!
  std::optional<Valuation> ratio_valuation;
  std::vector<ValuationSummand> trace;
  bool certified = false;
};

/// Picks the smallest admissible candidate (prime, above deg g and above
/// every prime in the coefficient denominators) and certifies L(g^p) != 0
/// through v_p(L(g^p)/(sp)!) = 0. With no candidates, tries the first 25
/// primes above the admissibility threshold.
Lemma81Report lemma81_nonvanishing(const Polynomial& g, const std::vector<std::uint64_t>& candidates = {});

}  // namespace mathieu
