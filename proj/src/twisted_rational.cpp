#include "mathieu/twisted_rational.hpp"

#include <algorithm>

#include "mathieu/errors.hpp"

namespace mathieu {
namespace {

void require_univariate(const Polynomial& p) {
  if (p.variables()->size() != 1) throw DomainError("twisted rationals are univariate");
}

// Root of each singular factor: x -> 0, 1-x -> 1, 1+x -> -1.
const std::array<long, 3> kRoots = {0, 1, -1};

}  // namespace

Polynomial singular_factor(const Ring& ring, const VariablesPtr& vars, std::size_t which) {
  const Polynomial x = Polynomial::variable(ring, vars, vars->name(0));
  const Polynomial one = Polynomial::constant(ring, vars, 1);
  switch (which) {
    case 0: return x;
    case 1: return one - x;
    case 2: return one + x;
    default: throw DomainError("no such singular factor");
  }
}

std::optional<Polynomial> divide_by_linear(const Polynomial& p, const Scalar& root) {
  require_univariate(p);
  if (p.is_zero()) return p;
  const long deg = *p.degree_in(0);
  // Synthetic division from the top coefficient down.
  std::vector<Scalar> coeffs(static_cast<std::size_t>(deg + 1), Scalar::zero(p.ring()));
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw DomainError("negative exponent in a twisted rational");
    coeffs[static_cast<std::size_t>(e[0])] = c;
  }
  std::vector<std::pair<Exponents, Scalar>> quotient;
  Scalar carry = Scalar::zero(p.ring());
  for (long k = deg; k >= 1; --k) {
    carry = coeffs[static_cast<std::size_t>(k)] + carry * root;
    quotient.emplace_back(Exponents{static_cast<int>(k - 1)}, carry);
  }
  const Scalar remainder = coeffs[0] + carry * root;
  if (!remainder.is_zero()) return std::nullopt;
  return Polynomial::from_terms(p.ring(), p.variables(), std::move(quotient));
}

TwistedRational::TwistedRational(Polynomial numerator, Powers denominator)
    : numerator_(std::move(numerator)), denominator_(denominator) {
  require_univariate(numerator_);
  for (int k : denominator_) {
    if (k < 0) throw DomainError("denominator exponents must be non-negative");
  }
  if (numerator_.is_zero()) denominator_ = {0, 0, 0};
}

TwistedRational TwistedRational::reduced() const {
  Polynomial num = numerator_;
  Powers den = denominator_;
  const Ring ring = num.ring();
  for (std::size_t f = 0; f < 3; ++f) {
    while (den[f] > 0 && !num.is_zero()) {
      auto q = divide_by_linear(num, Scalar::from_integer(ring, kRoots[f]));
      if (!q) break;
      // 1-x = -(x-1)
      num = f == 1 ? -*q : *q;
      --den[f];
    }
  }
  return TwistedRational(std::move(num), den);
}

bool TwistedRational::is_polynomial() const {
  const TwistedRational r = reduced();
  return r.denominator_ == Powers{0, 0, 0};
}

Polynomial TwistedRational::to_polynomial() const {
  const TwistedRational r = reduced();
  if (r.denominator_ != Powers{0, 0, 0}) {
    throw DomainError("not a polynomial: " + r.to_string());
  }
  return r.numerator_;
}

Polynomial TwistedRational::numerator_over(const Powers& target) const {
  Polynomial num = numerator_;
  for (std::size_t f = 0; f < 3; ++f) {
    if (target[f] < denominator_[f]) throw DomainError("target denominator too small");
    const Polynomial factor = singular_factor(num.ring(), num.variables(), f);
    for (int k = denominator_[f]; k < target[f]; ++k) num = num * factor;
  }
  return num;
}

TwistedRational operator+(const TwistedRational& a, const TwistedRational& b) {
  TwistedRational::Powers common{};
  for (std::size_t f = 0; f < 3; ++f) common[f] = std::max(a.denominator_[f], b.denominator_[f]);
  return TwistedRational(a.numerator_over(common) + b.numerator_over(common), common);
}

TwistedRational operator*(const TwistedRational& a, const TwistedRational& b) {
  TwistedRational::Powers sum{};
  for (std::size_t f = 0; f < 3; ++f) sum[f] = a.denominator_[f] + b.denominator_[f];
  return TwistedRational(a.numerator_ * b.numerator_, sum);
}

TwistedRational TwistedRational::derivative() const {
  // (N/D)' = (N' - N D'/D) / D with D'/D = a/x - b/(1-x) + c/(1+x);
  // written over D times each factor that actually occurs.
  const Ring ring = numerator_.ring();
  Powers bumped = denominator_;
  Polynomial extra = Polynomial::constant(ring, variables(), 1);
  for (std::size_t f = 0; f < 3; ++f) {
    if (denominator_[f] > 0) {
      ++bumped[f];
      extra = extra * singular_factor(ring, variables(), f);
    }
  }
  Polynomial log_derivative_times_extra(ring, variables());
  const std::array<long, 3> signs = {1, -1, 1};
  for (std::size_t f = 0; f < 3; ++f) {
    if (denominator_[f] == 0) continue;
    Polynomial cofactor = Polynomial::constant(ring, variables(), signs[f] * denominator_[f]);
    for (std::size_t g = 0; g < 3; ++g) {
      if (g != f && denominator_[g] > 0) cofactor = cofactor * singular_factor(ring, variables(), g);
    }
    log_derivative_times_extra += cofactor;
  }
  return TwistedRational(numerator_.derivative(0) * extra - numerator_ * log_derivative_times_extra,
                         bumped)
      .reduced();
}

bool operator==(const TwistedRational& a, const TwistedRational& b) {
  const TwistedRational ra = a.reduced();
  const TwistedRational rb = b.reduced();
  return ra.denominator_ == rb.denominator_ && ra.numerator_ == rb.numerator_;
}

std::string TwistedRational::to_string() const {
  std::string den;
  const std::string& x = variables()->name(0);
  const std::array<std::string, 3> names = {x, "(1-" + x + ")", "(1+" + x + ")"};
  for (std::size_t f = 0; f < 3; ++f) {
    if (denominator_[f] == 0) continue;
    if (!den.empty()) den += "*";
    den += names[f];
    if (denominator_[f] > 1) den += "^" + std::to_string(denominator_[f]);
  }
  if (den.empty()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/(" + den + ")";
}

}  // namespace mathieu
