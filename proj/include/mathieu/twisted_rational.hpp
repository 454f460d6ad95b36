#pragma once

#include <array>
#include <optional>
#include <string>

#include "mathieu/polynomial.hpp"

namespace mathieu {

/// N(x) / (x^a (1-x)^b (1+x)^c) for a univariate polynomial N and
/// non-negative a, b, c. Intermediate values of w^-1 d w with a classical
/// weight w. Cancellation happens only in reduce(), by exact division.
class TwistedRational {
 public:
  /// Denominator exponents in the order x, 1-x, 1+x.
  using Powers = std::array<int, 3>;

  explicit TwistedRational(Polynomial numerator, Powers denominator = {0, 0, 0});

  static TwistedRational from_polynomial(const Polynomial& p) { return TwistedRational(p); }

  const Polynomial& numerator() const { return numerator_; }
  const Powers& denominator() const { return denominator_; }
  const VariablesPtr& variables() const { return numerator_.variables(); }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Cancels every singular factor that divides the numerator exactly.
  TwistedRational reduced() const;
  /// True when the reduced denominator is 1.
  bool is_polynomial() const;
  /// Throws DomainError unless is_polynomial().
  Polynomial to_polynomial() const;

  TwistedRational derivative() const;
  friend TwistedRational operator+(const TwistedRational& a, const TwistedRational& b);
  friend TwistedRational operator*(const TwistedRational& a, const TwistedRational& b);

  /// Equality of reduced forms.
  friend bool operator==(const TwistedRational& a, const TwistedRational& b);

  std::string to_string() const;

 private:
  /// Numerator rewritten over the given (componentwise larger) denominator.
  Polynomial numerator_over(const Powers& target) const;

  Polynomial numerator_;
  Powers denominator_;
};

/// The singular factors x, 1-x, 1+x as polynomials in the single variable
/// of `vars`.
Polynomial singular_factor(const Ring& ring, const VariablesPtr& vars, std::size_t which);

/// Exact division by (x - root); nullopt when the remainder is nonzero.
std::optional<Polynomial> divide_by_linear(const Polynomial& p, const Scalar& root);

}  // namespace mathieu
