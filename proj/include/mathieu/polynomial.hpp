#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mathieu/scalar.hpp"
#include "mathieu/variables.hpp"

namespace mathieu {

/// Dense exponent vector indexed like the owning VariableSet.
using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties broken by the declared variable order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

/// Integer degree, or nullopt for minus infinity (the zero polynomial).
using Degree = std::optional<long>;

/// Weight per variable; the weight of a term is sum weight(v) * exponent(v).
class Grading {
 public:
  Grading(VariablesPtr vars, std::vector<int> weights);
  /// Unlisted variables get weight 0.
  static Grading from_weights(VariablesPtr vars, const std::map<std::string, int>& weights);
  static Grading total_degree(VariablesPtr vars);
  /// Deg(c w^a z^b) = |b| - |a|.
  static Grading zeta_z(const PhaseSpace& phase);
  /// Weight 1 on z1..zn, 0 on the symbols: degree as a polynomial over k[w].
  static Grading z_only(const PhaseSpace& phase);

  long weight(const Exponents& e) const;
  const VariablesPtr& variables() const { return vars_; }

 private:
  VariablesPtr vars_;
  std::vector<int> weights_;
};

/// Sparse multivariate (Laurent-capable) polynomial with coefficients in a
/// fixed ring. Canonical: no zero coefficients are stored, so equal
/// polynomials have identical term maps.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  /// The zero polynomial.
  Polynomial(Ring ring, VariablesPtr vars);

  static Polynomial constant(Ring ring, VariablesPtr vars, const Scalar& value);
  static Polynomial constant(Ring ring, VariablesPtr vars, long value);
  static Polynomial variable(Ring ring, VariablesPtr vars, const std::string& name);
  static Polynomial monomial(Ring ring, VariablesPtr vars, Exponents exponents,
                             const Scalar& coefficient);
  /// Sums repeated exponent vectors and drops zeros.
  static Polynomial from_terms(Ring ring, VariablesPtr vars,
                               std::vector<std::pair<Exponents, Scalar>> terms);

  const Ring& ring() const { return ring_; }
  const VariablesPtr& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Polynomial zero_like() const { return Polynomial(ring_, vars_); }
  Polynomial one_like() const { return constant(ring_, vars_, 1); }
  Polynomial constant_like(const Scalar& c) const { return constant(ring_, vars_, c); }
  Polynomial variable_like(const std::string& name) const { return variable(ring_, vars_, name); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  /// Multiplies by the monomial x^shift (exponent-wise addition).
  Polynomial shifted(const Exponents& shift) const;
  /// p^0 = 1; binary exponentiation. Negative exponents only for invertible
  /// monomials over Laurent variables.
  Polynomial pow(long exponent) const;

  /// Formal partial derivative; Laurent exponents differentiate as
  /// n t^(n-1) for negative n too.
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(const std::string& var) const;
  /// k-fold partial derivative.
  Polynomial derivative(std::size_t var, unsigned k) const;

  std::map<long, Polynomial> homogeneous_components(const Grading& grading) const;
  /// Maximum term weight; nullopt (minus infinity) for zero.
  Degree grade_degree(const Grading& grading) const;
  Degree total_degree() const;
  /// Largest exponent of one variable; nullopt for zero.
  Degree degree_in(std::size_t var) const;
  bool is_homogeneous(const Grading& grading) const;

  Scalar coefficient(const Exponents& e) const;
  Scalar constant_term() const;

  /// Simultaneous substitution. Every binding must live in `target`; unbound
  /// variables are carried over by name. A variable raised to a negative
  /// power must be bound to an invertible monomial.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                        const VariablesPtr& target) const;
  /// Re-indexes into another variable set by name. Variables with a
  /// nonzero exponent must exist in the target.
  Polynomial embed(const VariablesPtr& target) const;

  /// Applies conj() to every coefficient.
  Polynomial conjugate() const;
  Polynomial map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  /// Canonical text, e.g. "3/2*w1^2*z1 - z2". Parsed back by parse_polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& rhs) const;
  void check_exponents(const Exponents& e) const;
  void add_term(const Exponents& e, const Scalar& c);

  Ring ring_;
  VariablesPtr vars_;
  TermMap terms_;
};

/// Text of a single coefficient times a monomial, used by printers.
std::string monomial_to_string(const VariableSet& vars, const Exponents& e);

}  // namespace mathieu
