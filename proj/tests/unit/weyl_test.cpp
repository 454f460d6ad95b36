#include <gtest/gtest.h>

#include "mathieu/errors.hpp"
#include "mathieu/image_map.hpp"
#include "mathieu/parser.hpp"
#include "mathieu/weyl.hpp"
#include "support.hpp"

using namespace mathieu;
using testsupport::Gen;

namespace {

const Ring Q = Ring::rationals();

WeylElement op(const std::string& text, const PhaseSpace& phase, const Ring& ring = Q) {
  return parse_operator(text, phase.coordinates, ring);
}

Polynomial zpoly(const std::string& text, const PhaseSpace& phase, const Ring& ring = Q) {
  return parse_polynomial(text, phase.coordinates, ring);
}

WeylElement random_operator(Gen& gen, const PhaseSpace& phase, const Ring& ring, int max_degree, int terms) {
  WeylElement out(ring, phase.coordinates);
  const int count = gen.integer(1, terms);
  for (int k = 0; k < count; ++k) {
    out += WeylElement::normal_ordered(ring, phase.coordinates, gen.exponents(phase.n, max_degree),
                                       gen.exponents(phase.n, max_degree), gen.coefficient(ring));
  }
  return out;
}

}  // namespace

TEST(Weyl, ApplyExamples) {
  const PhaseSpace one = PhaseSpace::make(1);
  EXPECT_EQ(op("d1^2", one).apply(zpoly("z1^4", one)), zpoly("12*z1^2", one));
  EXPECT_EQ(op("z1*d1 + 1", one).apply(zpoly("1", one)), zpoly("1", one));
  const PhaseSpace two = PhaseSpace::make(2);
  const Ring qi = Ring::gaussian_rationals();
  EXPECT_TRUE(op("d1^2 + d2^2", two, qi).apply(zpoly("(z1 + i*z2)^2", two, qi)).is_zero());
}

TEST(Weyl, ComposeExamples) {
  const PhaseSpace one = PhaseSpace::make(1);
  const WeylElement d = WeylElement::derivation(Q, one.coordinates, "z1");
  const WeylElement z = WeylElement::coordinate(Q, one.coordinates, "z1");
  EXPECT_EQ(compose(d, z), op("z1*d1 + 1", one));
  EXPECT_EQ(compose(z, d), op("z1*d1", one));
  EXPECT_EQ(compose(d * d, z), op("z1*d1^2 + 2*d1", one));
}

TEST(Weyl, SymbolExamples) {
  const PhaseSpace one = PhaseSpace::make(1);
  const auto sym = [&](const std::string& s) { return parse_polynomial(s, one.symbols, Q); };
  const WeylElement d = WeylElement::derivation(Q, one.coordinates, "z1");
  const WeylElement z = WeylElement::coordinate(Q, one.coordinates, "z1");
  EXPECT_EQ(left_symbol(d * z, one), sym("w1*z1"));
  EXPECT_EQ(left_symbol(WeylElement::scalar(Q, one.coordinates, 1), one), sym("1"));
  EXPECT_EQ(right_symbol(op("z1*d1 + 1", one), one), sym("z1*w1 + 1"));
  EXPECT_EQ(right_symbol(op("z1^3", one), one), sym("z1^3"));
  EXPECT_EQ(kill_symbols(right_symbol(d * z, one), one), zpoly("1", one));
}

TEST(Weyl, LeftSymbolOfLambdaPowerTimesPPower) {
  const PhaseSpace two = PhaseSpace::make(2);
  const auto sym = [&](const std::string& s) { return parse_polynomial(s, two.symbols, Q); };
  const WeylElement lambda = op("d1^2 + 3*d1*d2", two);
  const Polynomial p = zpoly("z1 + z2^2", two);
  for (unsigned m = 1; m <= 3; ++m) {
    const WeylElement w = lambda.pow(m) * WeylElement::multiplication(p.pow(m));
    EXPECT_EQ(left_symbol(w, two), sym("w1^2 + 3*w1*w2").pow(m) * sym("z1 + z2^2").pow(m));
  }
}

TEST(Weyl, NormalOrderMatchesNaiveRewriter) {
  // Words d^b z^a in one or two variables, all small exponent combinations.
  const PhaseSpace two = PhaseSpace::make(2);
  for (int b1 = 0; b1 <= 3; ++b1) {
    for (int a1 = 0; a1 <= 3; ++a1) {
      for (int b2 = 0; b2 <= 2; ++b2) {
        for (int a2 = 0; a2 <= 2; ++a2) {
          testsupport::Word word;
          for (int k = 0; k < b1; ++k) word.push_back({true, 0});
          for (int k = 0; k < a2; ++k) word.push_back({false, 1});
          for (int k = 0; k < b2; ++k) word.push_back({true, 1});
          for (int k = 0; k < a1; ++k) word.push_back({false, 0});
          WeylElement product = WeylElement::scalar(Q, two.coordinates, 1);
          for (const auto& l : word) {
            const std::string name = two.coordinates->name(l.index);
            product = product * (l.derivation ? WeylElement::derivation(Q, two.coordinates, name)
                                              : WeylElement::coordinate(Q, two.coordinates, name));
          }
          WeylElement expected(Q, two.coordinates);
          for (const auto& [key, c] : testsupport::naive_normal_order(word, 2)) {
            expected += WeylElement::normal_ordered(Q, two.coordinates, key.first, key.second,
                                                    Scalar::from_integer(Q, static_cast<long>(c)));
          }
          EXPECT_EQ(product, expected) << b1 << a1 << b2 << a2;
        }
      }
    }
  }
}

TEST(Weyl, CanonicalCommutation) {
  const PhaseSpace three = PhaseSpace::make(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto d = WeylElement::derivation(Q, three.coordinates, three.coordinates->name(i));
      const auto z = WeylElement::coordinate(Q, three.coordinates, three.coordinates->name(j));
      const WeylElement bracket = compose(d, z) - compose(z, d);
      EXPECT_EQ(bracket, WeylElement::scalar(Q, three.coordinates, i == j ? 1 : 0));
    }
  }
}

TEST(Weyl, ComposeThenApplyIsApplyTwice) {
  Gen gen(31);
  for (int k = 0; k < 200; ++k) {
    const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(gen.integer(1, 2)));
    const Ring ring = k % 4 == 3 ? Ring::prime_field(3) : Q;
    const WeylElement a = random_operator(gen, phase, ring, 2, 3);
    const WeylElement b = random_operator(gen, phase, ring, 2, 3);
    const Polynomial f = gen.polynomial(ring, phase.coordinates, 4, 4);
    EXPECT_EQ(compose(a, b).apply(f), a.apply(b.apply(f)));
  }
}

TEST(Weyl, ApplyIsBilinear) {
  Gen gen(32);
  const PhaseSpace phase = PhaseSpace::make(2);
  for (int k = 0; k < 100; ++k) {
    const WeylElement a = random_operator(gen, phase, Q, 2, 3), b = random_operator(gen, phase, Q, 2, 3);
    const Polynomial f = gen.polynomial(Q, phase.coordinates, 4, 4), g = gen.polynomial(Q, phase.coordinates, 4, 4);
    const Scalar c = gen.coefficient(Q);
    EXPECT_EQ((a + b.scaled(c)).apply(f), a.apply(f) + b.apply(f).scaled(c));
    EXPECT_EQ(a.apply(f + g.scaled(c)), a.apply(f) + a.apply(g).scaled(c));
  }
}

TEST(Weyl, SymbolRoundTrips) {
  Gen gen(33);
  for (int k = 0; k < 100; ++k) {
    const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(gen.integer(1, 2)));
    const WeylElement w = random_operator(gen, phase, Q, 3, 4);
    EXPECT_EQ(left_symbol_inverse(left_symbol(w, phase), phase), w);
    EXPECT_EQ(right_symbol_inverse(right_symbol(w, phase), phase), w);
    const Polynomial s = gen.polynomial(Q, phase.symbols, 4, 4);
    EXPECT_EQ(left_symbol(left_symbol_inverse(s, phase), phase), s);
    EXPECT_EQ(right_symbol(right_symbol_inverse(s, phase), phase), s);
  }
}

TEST(Weyl, SymbolRouteMatchesLMap) {
  Gen gen(34);
  for (int k = 0; k < 150; ++k) {
    const PhaseSpace phase = PhaseSpace::make(static_cast<std::size_t>(gen.integer(1, 2)));
    const Polynomial f = gen.polynomial(Q, phase.symbols, 5, 5);
    EXPECT_EQ(l_map_via_symbols(f, phase), l_map(f, phase));
    EXPECT_EQ(l_map(f, phase), testsupport::reference_l_map(f, phase));
  }
}

TEST(DiffOperatorSpec, CommutationChecked) {
  const PhaseSpace one = PhaseSpace::make(1);
  const WeylElement d = WeylElement::derivation(Q, one.coordinates, "z1");
  const WeylElement z = WeylElement::coordinate(Q, one.coordinates, "z1");
  EXPECT_THROW(DiffOperatorSpec({d, z}), DomainError);
  EXPECT_NO_THROW(DiffOperatorSpec({d, d * d}));
}
