#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/polynomial.hpp"
#include "mathieu/twisted_rational.hpp"

namespace mathieu {

/// A classical weight with non-negative integer parameters.
///   hermite     e^{-x^2} on R
///   laguerre    x^alpha e^{-x} on (0, inf)
///   jacobi      (1-x)^alpha (1+x)^beta on (-1, 1)
///   uniform01   1 on (0, 1)
///   legendre    jacobi(0, 0)
struct WeightSpec {
  enum class Family { hermite, laguerre, jacobi, uniform01, legendre };

  Family family = Family::hermite;
  int alpha = 0;
  int beta = 0;

  static WeightSpec hermite() { return {Family::hermite, 0, 0}; }
  static WeightSpec laguerre(int alpha);
  static WeightSpec jacobi(int alpha, int beta);
  static WeightSpec uniform01() { return {Family::uniform01, 0, 0}; }
  static WeightSpec legendre() { return {Family::legendre, 0, 0}; }
  /// "hermite", "laguerre", "laguerre(2)", "jacobi(1,2)", "uniform01", "legendre".
  static WeightSpec parse(const std::string& text);

  /// Canonical text, accepted by parse().
  std::string name() const;
  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// mu_n / mu_0 for n = 0..size()-1.
class MomentFunctional {
 public:
  MomentFunctional(WeightSpec weight, std::vector<Rational> moments);

  const WeightSpec& weight() const { return weight_; }
  const std::vector<Rational>& values() const { return moments_; }
  std::size_t size() const { return moments_.size(); }
  /// Throws DomainError past the computed range.
  const Rational& operator[](std::size_t n) const;

 private:
  WeightSpec weight_;
  std::vector<Rational> moments_;
};

/// Normalized moments mu_0..mu_{n_max}.
MomentFunctional moments(const WeightSpec& weight, int n_max);

/// Integral against the product of the given one-variable functionals;
/// factor k acts on variable k of f.
Scalar integrate(const Polynomial& f, const std::vector<MomentFunctional>& factors);
Scalar integrate(const Polynomial& f, const MomentFunctional& m);
/// <f, g> = integral of f * conj(g).
Scalar inner_product(const Polynomial& f, const Polynomial& g,
                     const std::vector<MomentFunctional>& factors);
Scalar inner_product(const Polynomial& f, const Polynomial& g, const MomentFunctional& m);

/// Orthogonal polynomials indexed by degree (one variable) or multi-index.
struct OrthFamily {
  VariablesPtr variables;
  std::map<Exponents, Polynomial> members;
  /// Rodrigues constants c_a when the family came from Rodrigues' formula.
  std::map<Exponents, Rational> constants;
  std::optional<Polynomial> generator;

  /// Throws DomainError for an absent index.
  const Polynomial& at(const Exponents& a) const;
};

/// Monic p_0..p_{d_max} orthogonal for m; throws DomainError on a singular
/// Hankel system or when 2 d_max moments are unavailable.
OrthFamily gram_schmidt(const MomentFunctional& m, int d_max, const std::string& var = "x");

/// The Rodrigues generator g: 1, x, 1-x^2 or x(1-x).
Polynomial rodrigues_generator(const WeightSpec& weight, const VariablesPtr& vars);
/// c_a: (-1)^a, 1/a!, (-1)^a/(2^a a!) or (-1)^a/a!.
Rational rodrigues_constant(const WeightSpec& weight, int a);
/// w'/w: -2x, alpha/x - 1, -alpha/(1-x) + beta/(1+x), or 0.
TwistedRational log_derivative(const WeightSpec& weight, const VariablesPtr& vars);

/// u_a = c_a w^-1 d^a (w g^a), differentiating the weight directly.
Polynomial rodrigues(const WeightSpec& weight, int a, const std::string& var = "x");
/// Lambda^m (g^a) with Lambda = d + w'/w.
TwistedRational lambda_power(const WeightSpec& weight, int a, int m, const std::string& var = "x");
OrthFamily rodrigues_family(const WeightSpec& weight, int d_max, const std::string& var = "x");

/// Products u_{1,a_1}(x_1) ... u_{n,a_n}(x_n). Variable names must differ.
OrthFamily tensor_family(const std::vector<OrthFamily>& families);

/// One degree of the three-route comparison.
struct RouteComparison {
  int degree = 0;
  Polynomial rodrigues;
  Polynomial lambda_route;  // c_a Lambda^a(g^a)
  Polynomial monic;         // Gram-Schmidt
  bool rodrigues_equals_lambda = false;
  /// rodrigues = scale * monic; nullopt if not proportional.
  std::optional<Rational> scale;
};

std::vector<RouteComparison> compare_routes(const WeightSpec& weight, int d_max,
                                            const std::string& var = "x");

struct ImPrimeMembership {
  bool member = false;
  /// Constant contribution of the u_0 term in the expansion of f.
  Scalar f0;
  /// <f, 1>; must equal f0.
  Scalar moment_value;
  std::map<Exponents, Scalar> expansion;
  /// The standing assumption that 1 lies outside the image is not decided.
  std::string hypothesis = "assumed";
};

/// Expands f in the family (triangular in grlex order) and decides
/// membership by both criteria; throws VerificationFailure if they differ.
ImPrimeMembership im_prime_membership(const Polynomial& f, const OrthFamily& family,
                                      const std::vector<MomentFunctional>& factors);

/// det [mu_{i+j}]_{0 <= i,j <= d}.
Rational hankel_determinant(const MomentFunctional& m, int d);
bool hankel_nonsingular(const MomentFunctional& m, int d);

}  // namespace mathieu
