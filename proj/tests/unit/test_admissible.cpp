#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/generators.hpp"
#include "oracle.hpp"

using namespace gdnp;
using namespace fixtures;

TEST(CWord, ConstructorSorts) {
  const CWord w({Factor{0, a}, Factor{1, b}}, 2);
  EXPECT_EQ(w.factors(), (std::vector<Factor>{{1, b}, {0, a}}));
  EXPECT_EQ(w.star_count(), 2u);
}

TEST(CWord, TrailingUnitRule) {
  EXPECT_THROW(CWord({Factor{0, a}, Factor{0, e}}, 1), InvalidWord);
  EXPECT_NO_THROW(CWord({Factor{0, a}, Factor{0, e}}, 2));
  EXPECT_THROW(CWord({Factor{0, a}}, 2), InvalidWord);
  EXPECT_THROW(CWord({Factor{0, a}}, 0), InvalidWord);
  EXPECT_THROW(CWord({}, 1), InvalidWord);
}

TEST(CWord, DefaultIsUnit) {
  const CWord w;
  EXPECT_EQ(w.factors(), (std::vector<Factor>{{0, e}}));
  EXPECT_EQ(w.star_count(), 1u);
}

TEST(Ord, Examples) {
  EXPECT_TRUE(compare_ord(W("a"), W("D(a)")) < 0);
  EXPECT_TRUE(compare_ord(W("D(a)"), W("a & b")) < 0);
  EXPECT_TRUE(compare_ord(W("D(a)"), W("D(a) * b")) < 0);
  EXPECT_TRUE(compare_ord(W("b & a"), W("a & b")) == 0);
}

TEST(Ord, TotalOnSamples) {
  Sampler s({a, b}, 21);
  for (int i = 0; i < 1000; ++i) {
    const CWord u = s.word(4, 3), v = s.word(4, 3), w = s.word(4, 3);
    EXPECT_EQ(compare_ord(u, v) == 0, u == v);
    EXPECT_EQ(compare_ord(u, v), 0 <=> compare_ord(v, u));
    if (compare_ord(u, v) < 0 && compare_ord(v, w) < 0) EXPECT_TRUE(compare_ord(u, w) < 0);
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(CWord()), 0);
  EXPECT_EQ(weight(W("D(a) & b")), 0);
  EXPECT_EQ(weight(W("a & e")), -1);
}

TEST(Products, DotExamples) {
  EXPECT_EQ(dot(W("D(a)"), W("b")), CWord({Factor{1, a}, Factor{0, b}}, 1));
  EXPECT_EQ(dot(W("a & D(b)"), W("c")), CWord({Factor{1, b}, Factor{0, c}, Factor{0, a}}, 2));
  Sampler s({a, b}, 1);
  for (int i = 0; i < 200; ++i) {
    const CWord w = s.word(4, 3);
    EXPECT_EQ(dot(w, CWord()), w);
    EXPECT_EQ(dot(CWord(), w), w);
  }
}

TEST(Products, StarExamples) {
  EXPECT_EQ(star(W("a"), W("b")), CWord({Factor{0, b}, Factor{0, a}}, 2));
  EXPECT_EQ(star(W("a"), CWord()), CWord({Factor{0, a}, Factor{0, e}}, 2));
  EXPECT_EQ(star(W("D(a) * b"), W("c")), CWord({Factor{1, a}, Factor{0, c}, Factor{0, b}}, 2));
}

TEST(Products, DotTrimsUnitsAfterStarBlock) {
  EXPECT_EQ(dot(W("a * b"), CWord()), W("a * b"));
  EXPECT_EQ(dot(W("b & e"), W("a")), CWord({Factor{0, b}, Factor{0, a}}, 2));
}

TEST(Derive, Examples) {
  EXPECT_EQ(derive(W("a")), P("D(a)"));
  EXPECT_EQ(derive(W("b * a")), P("D(b) * a + D(a) * b - D(e) * b * a"));
  EXPECT_EQ(derive(W("b & a")), P("D(b) & a + D(a) & b"));
}

TEST(Derive, MatchesDefiningIdentities) {
  Sampler s({a, b}, 2);
  for (int i = 0; i < 500; ++i) {
    const CWord w = s.word(4, 3);
    EXPECT_EQ(oracle::from_cpoly(derive(w)), oracle::derive(oracle::from_cpoly(word_poly(w))));
  }
}

TEST(Poly, LinearStructure) {
  EXPECT_TRUE(poly_add(P("D(a)"), P("-1 D(a)")).is_zero());
  EXPECT_TRUE(poly_scale(Rational(0), P("a + b")).is_zero());
  EXPECT_EQ(poly_add(P("D(a)"), P("D(b)")).size(), 2u);
  EXPECT_EQ(poly_mul(Product::Dot, P("a + b"), P("e")), P("a + b"));
  EXPECT_EQ(poly_derive(P("e")), P("D(e)"));
  EXPECT_EQ(poly_mul(Product::Star, P("a"), P("b + c")), P("b & a + c & a"));
}

TEST(Poly, Leading) {
  EXPECT_EQ(leading(poly_derive(P("D(a) & b"))).first, W("D^2(a) & b"));
  EXPECT_EQ(leading(P("a")), std::make_pair(W("a"), Rational(1)));
  EXPECT_EQ(leading(P("2 a & b + 3 D(a)")), std::make_pair(W("a & b"), Rational(2)));
  EXPECT_THROW((void)leading(CPoly()), ZeroPolynomial);
}

TEST(Poly, ProductsAgreeWithReferenceModel) {
  Sampler s({a, b}, 8);
  for (int i = 0; i < 200; ++i) {
    const CPoly x = s.cpoly(3, 4, 3), y = s.cpoly(3, 4, 3);
    const auto ox = oracle::from_cpoly(x), oy = oracle::from_cpoly(y);
    EXPECT_EQ(oracle::from_cpoly(poly_mul(Product::Dot, x, y)), oracle::dot(ox, oy));
    EXPECT_EQ(oracle::from_cpoly(poly_mul(Product::Star, x, y)), oracle::star(ox, oy));
  }
}

TEST(Axioms, HoldOnRandomTriples) {
  Sampler s({a, b}, 13);
  const CPoly de = P("D(e)");
  const CPoly unit = P("e");
  auto mul = [](const CPoly& x, const CPoly& y) { return poly_mul(Product::Dot, x, y); };
  auto st = [](const CPoly& x, const CPoly& y) { return poly_mul(Product::Star, x, y); };
  for (int i = 0; i < 100; ++i) {
    const CPoly x = s.cpoly(2, 3, 2), y = s.cpoly(2, 3, 2), z = s.cpoly(2, 3, 2);
    EXPECT_EQ(mul(x, y), mul(y, x));
    EXPECT_EQ(st(x, y), st(y, x));
    EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
    EXPECT_EQ(st(st(x, y), z), st(x, st(y, z)));
    EXPECT_EQ(mul(x, unit), x);
    EXPECT_EQ(st(mul(x, y), z), mul(x, st(y, z)));
    EXPECT_EQ(poly_derive(st(x, y)), st(poly_derive(x), y) + st(x, poly_derive(y)));
    EXPECT_EQ(poly_derive(mul(x, y)),
              mul(poly_derive(x), y) + mul(x, poly_derive(y)) - mul(mul(x, y), de));
  }
}

TEST(Weight, Grading) {
  Sampler s({a, b}, 17);
  for (int i = 0; i < 500; ++i) {
    const CWord u = s.word(4, 3), v = s.word(4, 3);
    EXPECT_EQ(weight(dot(u, v)), weight(u) + weight(v));
    EXPECT_EQ(weight(star(u, v)), weight(u) + weight(v) - 1);
    for (const auto& [w, coeff] : derive(u)) EXPECT_EQ(weight(w), weight(u) + 1);
  }
}

TEST(Weight0Words, MatchBruteForceCount) {
  for (const auto& xl : {Monomial(), M({a}), M({a, a}), M({b, a}), M({b, a, a})}) {
    std::vector<std::uint32_t> ranks;
    for (Letter l : xl.letters()) ranks.push_back(l.rank());
    for (std::uint32_t d = 0; d <= 3; ++d) {
      const auto words = weight0_words(xl, d);
      EXPECT_EQ(words.size(), oracle::count_weight0_words(ranks, d));
      for (const auto& w : words) {
        EXPECT_EQ(weight(w), 0);
        EXPECT_EQ(w.degree(), d);
        EXPECT_EQ(w.x_letters(), xl);
      }
    }
  }
}
