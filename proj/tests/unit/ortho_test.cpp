#include <gtest/gtest.h>

#include "mathieu/errors.hpp"
#include "mathieu/ortho.hpp"
#include "mathieu/parser.hpp"
#include "support.hpp"

using namespace mathieu;
using testsupport::Gen;

namespace {

const Ring Q = Ring::rationals();
const VariablesPtr X = VariableSet::make(std::vector<std::string>{"x"});

Polynomial px(const std::string& s) { return parse_polynomial(s, X, Q); }
Rational r(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

std::vector<WeightSpec> shipped_families() {
  std::vector<WeightSpec> out{WeightSpec::hermite(), WeightSpec::uniform01(), WeightSpec::legendre()};
  for (int a = 0; a <= 2; ++a) out.push_back(WeightSpec::laguerre(a));
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) out.push_back(WeightSpec::jacobi(a, b));
  }
  return out;
}

}  // namespace

TEST(Moments, Examples) {
  EXPECT_EQ(moments(WeightSpec::laguerre(0), 4)[4], r(24));
  EXPECT_EQ(moments(WeightSpec::uniform01(), 1)[1], r(1, 2));
  EXPECT_EQ(moments(WeightSpec::hermite(), 2)[2], r(1, 2));
}

TEST(Moments, ClosedFormsAndExpansionOracle) {
  const MomentFunctional h = moments(WeightSpec::hermite(), 12);
  for (int k = 0; k <= 6; ++k) {
    // (2k-1)!! / 2^k
    Rational expected(1);
    for (int j = 1; j <= 2 * k - 1; j += 2) expected *= r(j);
    expected /= Rational(Integer(Integer(1) << k));
    EXPECT_EQ(h[static_cast<std::size_t>(2 * k)], expected);
    if (k < 6) EXPECT_TRUE(h[static_cast<std::size_t>(2 * k + 1)].is_zero());
  }
  for (int a = 0; a <= 2; ++a) {
    const MomentFunctional l = moments(WeightSpec::laguerre(a), 8);
    for (int n = 0; n <= 8; ++n) {
      EXPECT_EQ(l[static_cast<std::size_t>(n)], Rational(Integer(factorial(static_cast<unsigned long>(n + a)) /
                                                                 factorial(static_cast<unsigned long>(a)))));
    }
    for (int b = 0; b <= 2; ++b) {
      const auto expected = testsupport::jacobi_moments_by_expansion(a, b, 10);
      const MomentFunctional j = moments(WeightSpec::jacobi(a, b), 10);
      for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(j[n], expected[n]) << a << b << n;
    }
  }
  const auto legendre = testsupport::jacobi_moments_by_expansion(0, 0, 10);
  EXPECT_EQ(moments(WeightSpec::legendre(), 10).values(), legendre);
  EXPECT_THROW(moments(WeightSpec::hermite(), 3)[4], DomainError);
}

TEST(WeightSpec, ParseAndName) {
  EXPECT_EQ(WeightSpec::parse("laguerre(2)"), WeightSpec::laguerre(2));
  EXPECT_EQ(WeightSpec::parse("jacobi(1,2)"), WeightSpec::jacobi(1, 2));
  EXPECT_EQ(WeightSpec::parse("legendre"), WeightSpec::legendre());
  EXPECT_THROW(WeightSpec::parse("chebyshev"), DomainError);
  EXPECT_THROW(WeightSpec::laguerre(-1), DomainError);
}

TEST(GramSchmidt, Examples) {
  EXPECT_EQ(gram_schmidt(moments(WeightSpec::legendre(), 4), 1).at({1}), px("x"));
  EXPECT_EQ(gram_schmidt(moments(WeightSpec::uniform01(), 4), 1).at({1}), px("x - 1/2"));
  EXPECT_EQ(gram_schmidt(moments(WeightSpec::laguerre(0), 4), 1).at({1}), px("x - 1"));
}

TEST(Rodrigues, Examples) {
  EXPECT_EQ(rodrigues(WeightSpec::hermite(), 1), px("2*x"));
  EXPECT_EQ(rodrigues(WeightSpec::laguerre(0), 1), px("1 - x"));
  EXPECT_EQ(rodrigues(WeightSpec::jacobi(0, 0), 1), px("x"));
  EXPECT_EQ(rodrigues(WeightSpec::hermite(), 2), px("4*x^2 - 2"));
  EXPECT_EQ(rodrigues(WeightSpec::legendre(), 2), px("3/2*x^2 - 1/2"));
  EXPECT_EQ(rodrigues(WeightSpec::laguerre(0), 2), px("1/2*x^2 - 2*x + 1"));
}

TEST(LambdaPower, Examples) {
  EXPECT_EQ(lambda_power(WeightSpec::hermite(), 1, 1).to_polynomial(), px("-2*x"));
  for (const auto& w : shipped_families()) {
    const Polynomial g = rodrigues_generator(w, X);
    EXPECT_EQ(lambda_power(w, 3, 0).to_polynomial(), g.pow(3)) << w.name();
  }
  EXPECT_EQ(lambda_power(WeightSpec::laguerre(0), 2, 1).to_polynomial(), px("2*x - x^2"));
}

TEST(LambdaPower, PolynomialWheneverOrderAtMostDegree) {
  std::vector<WeightSpec> families;
  for (int a = 0; a <= 2; ++a) families.push_back(WeightSpec::laguerre(a));
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) families.push_back(WeightSpec::jacobi(a, b));
  }
  for (const auto& w : families) {
    for (int a = 0; a <= 6; ++a) {
      for (int m = 0; m <= a; ++m) EXPECT_TRUE(lambda_power(w, a, m).is_polynomial()) << w.name() << a << m;
    }
  }
  // Past the degree the denominator survives for a singular weight.
  EXPECT_FALSE(lambda_power(WeightSpec::laguerre(1), 0, 1).is_polynomial());
}

TEST(InnerProduct, Examples) {
  EXPECT_TRUE(inner_product(px("x"), px("1"), moments(WeightSpec::legendre(), 4)).is_zero());
  EXPECT_TRUE(inner_product(px("1 - x"), px("1"), moments(WeightSpec::laguerre(0), 4)).is_zero());
  EXPECT_EQ(inner_product(px("x - 1/2"), px("x - 1/2"), moments(WeightSpec::uniform01(), 4)),
            Scalar::from_rational(Q, r(1, 12)));
  EXPECT_THROW(inner_product(px("x^3"), px("x^3"), moments(WeightSpec::uniform01(), 4)), DomainError);
}

TEST(InnerProduct, ConjugatesSecondArgument) {
  const Ring qi = Ring::gaussian_rationals();
  const Polynomial f = parse_polynomial("i*x", X, qi);
  const MomentFunctional m = moments(WeightSpec::uniform01(), 4);
  EXPECT_EQ(inner_product(f, f, m), Scalar::from_rational(qi, r(1, 3)));
}

TEST(Tensor, Examples) {
  const OrthFamily l1 = rodrigues_family(WeightSpec::legendre(), 3, "x1");
  const OrthFamily l2 = rodrigues_family(WeightSpec::legendre(), 3, "x2");
  const OrthFamily t = tensor_family({l1, l2});
  EXPECT_EQ(t.at({1, 1}).to_string(), "x1*x2");
  EXPECT_TRUE(t.at({0, 0}).is_constant());
  const OrthFamily g1 = rodrigues_family(WeightSpec::laguerre(0), 2, "x1");
  const OrthFamily g2 = rodrigues_family(WeightSpec::laguerre(0), 2, "x2");
  EXPECT_EQ(tensor_family({g1, g2}).at({1, 0}).to_string(), "-x1 + 1");
  EXPECT_THROW(tensor_family({l1, l1}), DomainError);
}

TEST(Tensor, OrthogonalForProductMoments) {
  const OrthFamily a = rodrigues_family(WeightSpec::hermite(), 3, "x1");
  const OrthFamily b = rodrigues_family(WeightSpec::jacobi(1, 2), 3, "x2");
  const OrthFamily t = tensor_family({a, b});
  const std::vector<MomentFunctional> factors{moments(WeightSpec::hermite(), 8), moments(WeightSpec::jacobi(1, 2), 8)};
  for (const auto& [ea, ua] : t.members) {
    EXPECT_EQ(ua.total_degree(), Degree(ea[0] + ea[1]));
    for (const auto& [eb, ub] : t.members) {
      if (ea == eb) continue;
      EXPECT_TRUE(inner_product(ua, ub, factors).is_zero());
    }
  }
}

TEST(Routes, ThreeWayAgreementAndOrthogonality) {
  for (const auto& w : shipped_families()) {
    const auto rows = compare_routes(w, 8);
    const MomentFunctional m = moments(w, 16);
    ASSERT_EQ(rows.size(), 9U);
    for (const auto& row : rows) {
      EXPECT_TRUE(row.rodrigues_equals_lambda) << w.name() << " " << row.degree;
      ASSERT_TRUE(row.scale.has_value());
      EXPECT_FALSE(row.scale->is_zero());
      EXPECT_EQ(row.monic.scaled(Scalar(*row.scale)), row.rodrigues);
      EXPECT_EQ(row.rodrigues.total_degree(), Degree(row.degree));
      for (const auto& other : rows) {
        if (other.degree != row.degree) EXPECT_TRUE(inner_product(row.rodrigues, other.rodrigues, m).is_zero());
      }
    }
  }
}

TEST(ImPrime, Examples) {
  const WeightSpec lag = WeightSpec::laguerre(0);
  const OrthFamily fam = rodrigues_family(lag, 4);
  const std::vector<MomentFunctional> fac{moments(lag, 8)};
  EXPECT_TRUE(im_prime_membership(px("1 - x"), fam, fac).member);
  const ImPrimeMembership one = im_prime_membership(px("1"), fam, fac);
  EXPECT_FALSE(one.member);
  EXPECT_EQ(one.f0, Scalar::one(Q));
  EXPECT_EQ(one.hypothesis, "assumed");
  const WeightSpec leg = WeightSpec::legendre();
  const ImPrimeMembership sq = im_prime_membership(px("x^2"), rodrigues_family(leg, 4), {moments(leg, 8)});
  EXPECT_FALSE(sq.member);
  EXPECT_EQ(sq.f0, Scalar::from_rational(Q, r(1, 3)));
  EXPECT_THROW(im_prime_membership(px("x^5"), fam, fac), DomainError);
}

TEST(ImPrime, BothCriteriaAgree) {
  Gen gen(51);
  for (const auto& w : shipped_families()) {
    const OrthFamily fam = rodrigues_family(w, 5);
    const std::vector<MomentFunctional> fac{moments(w, 10)};
    for (int k = 0; k < 200; ++k) {
      const Polynomial f = gen.polynomial(Q, X, 5, 4);
      const ImPrimeMembership m = im_prime_membership(f, fam, fac);
      EXPECT_EQ(m.f0, m.moment_value);
      EXPECT_EQ(m.member, inner_product(f, px("1"), fac).is_zero());
    }
  }
}

TEST(Hankel, ExamplesAndOracle) {
  EXPECT_EQ(hankel_determinant(moments(WeightSpec::uniform01(), 4), 1), r(1, 12));
  EXPECT_EQ(hankel_determinant(moments(WeightSpec::uniform01(), 4), 0), r(1));
  EXPECT_EQ(hankel_determinant(moments(WeightSpec::laguerre(0), 4), 1), r(1));
  for (const auto& w : shipped_families()) {
    const MomentFunctional m = moments(w, 16);
    EXPECT_TRUE(hankel_nonsingular(m, 8)) << w.name();
    for (int d = 0; d <= 4; ++d) {
      std::vector<std::vector<Rational>> h;
      for (int i = 0; i <= d; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j <= d; ++j) row.push_back(m[static_cast<std::size_t>(i + j)]);
        h.push_back(row);
      }
      EXPECT_EQ(hankel_determinant(m, d), testsupport::cofactor_determinant(h));
    }
  }
}

TEST(TwistedRational, ReductionAndDivision) {
  const Polynomial x = px("x");
  const TwistedRational a(px("x^2 - x"), {1, 1, 0});
  EXPECT_TRUE(a.reduced().is_polynomial());
  EXPECT_EQ(a.to_polynomial(), px("-1"));
  EXPECT_THROW(TwistedRational(px("1"), {1, 0, 0}).to_polynomial(), DomainError);
  EXPECT_EQ(divide_by_linear(px("x^2 - 1"), Scalar::one(Q)), std::optional<Polynomial>(px("x + 1")));
  EXPECT_FALSE(divide_by_linear(px("x^2 + 1"), Scalar::one(Q)).has_value());
  EXPECT_EQ(TwistedRational(px("1"), {1, 0, 0}).derivative(), TwistedRational(px("-1"), {2, 0, 0}));
}
