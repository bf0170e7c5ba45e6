#include <gtest/gtest.h>

#include <functional>

#include "axioms.hpp"
#include "fixtures.hpp"
#include "gdnp/differential.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/generators.hpp"
#include "oracle.hpp"

using namespace gdnp;
using namespace fixtures;

namespace {

DWord DW(std::vector<Factor> f) { return DWord(std::move(f)); }
DPoly DP(std::vector<std::pair<DWord, int>> terms) {
  std::vector<DPoly::Term> raw;
  for (auto& [w, c] : terms) raw.emplace_back(std::move(w), Rational(c));
  return DPoly::from_unsorted(std::move(raw));
}

}  // namespace

TEST(DWord, RejectsUnitFactors) { EXPECT_THROW(DW({{0, e}}), InvalidWord); }

TEST(DMul, Examples) {
  EXPECT_EQ(dmul(DW({{1, a}}), DW({{1, a}})), DW({{1, a}, {1, a}}));
  const DWord w = DW({{2, b}, {0, a}});
  EXPECT_EQ(dmul(w, DWord{}), w);
  EXPECT_EQ(dmul(DW({{2, a}}), DW({{0, b}})), DW({{2, a}, {0, b}}));
}

TEST(DDerive, Examples) {
  EXPECT_EQ(dderive(DPoly(DW({{0, a}, {0, b}}))), DP({{DW({{1, a}, {0, b}}), 1}, {DW({{0, a}, {1, b}}), 1}}));
  EXPECT_TRUE(dderive(DPoly(DWord{})).is_zero());
  EXPECT_EQ(dderive(DPoly(DW({{1, a}}))), DPoly(DW({{2, a}})));
}

TEST(DDerive, SquaresPickUpMultiplicity) {
  EXPECT_EQ(dderive(DPoly(DW({{0, a}, {0, a}}))), DP({{DW({{1, a}, {0, a}}), 2}}));
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(T("a@(b*c)")), DP({{DW({{0, a}, {1, b}, {0, c}}), 1}, {DW({{0, a}, {0, b}, {1, c}}), 1}}));
  EXPECT_TRUE(theta(T("a@e")).is_zero());
  EXPECT_EQ(theta(T("e@(e@a)")), DPoly(DW({{2, a}})));
  EXPECT_EQ(theta(T("e")), DPoly(DWord{}));
}

TEST(Theta, MatchesReferenceModel) {
  Sampler s({a, b}, 51);
  for (int i = 0; i < 300; ++i) {
    const Term t = s.term_up_to(7);
    EXPECT_EQ(oracle::from_dpoly(theta(t)), oracle::theta(t));
  }
}

TEST(Theta, KillsCircWithUnit) {
  Sampler s({a, b}, 52);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(theta(Term::circ(s.term_up_to(6), Term::unit())).is_zero());
}

TEST(Theta, DiamondIdentity) {
  Sampler s({a, b}, 53);
  for (int i = 0; i < 200; ++i) {
    const Term x = s.term_up_to(3), y = s.term_up_to(3), z = s.term_up_to(3);
    EXPECT_EQ(theta(Term::circ(x, Term::dot(y, z))),
              theta(Term::dot(Term::circ(x, y), z)) + theta(Term::dot(Term::circ(x, z), y)));
  }
}

TEST(Theta, UnitCircIsLeibnizDerivation) {
  Sampler s({a, b}, 54);
  for (int i = 0; i < 200; ++i) {
    const Term x = s.term_up_to(4), y = s.term_up_to(4);
    const DPoly lhs = theta(Term::circ(Term::unit(), Term::dot(x, y)));
    const DPoly rhs = theta(Term::dot(Term::circ(Term::unit(), x), y)) +
                      theta(Term::dot(x, Term::circ(Term::unit(), y)));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(KX, SatisfiesGdnpIdentities) {
  Sampler s({a, b}, 55);
  for (int i = 0; i < 200; ++i) {
    const DPoly x = s.dpoly(2, 3, 2), y = s.dpoly(2, 3, 2), z = s.dpoly(2, 3, 2);
    const auto mul = [](const DPoly& p, const DPoly& q) { return dmul(p, q); };
    EXPECT_TRUE(axioms::gdnp_failures(x, y, z, mul, dcirc).empty());
  }
}

TEST(NormalWord, Examples) {
  EXPECT_EQ(normal_word(DW({{2, a}})), T("e@(e@a)"));
  EXPECT_EQ(normal_word(DWord{}), T("e"));
  EXPECT_EQ(normal_word(DW({{0, b}, {1, a}})), T("(e@a)*b"));
}

TEST(NormalWord, InvertsTheta) {
  const std::vector<Letter> gens{a, b};
  std::size_t count = 0;
  // Every D-word with at most 3 factors and total degree at most 3.
  std::vector<Factor> kinds;
  for (std::uint32_t d = 0; d <= 3; ++d) {
    for (Letter g : gens) kinds.push_back(Factor{d, g});
  }
  std::function<void(std::size_t, std::vector<Factor>&, std::uint32_t)> walk =
      [&](std::size_t from, std::vector<Factor>& cur, std::uint32_t deg) {
        const DWord w(cur);
        EXPECT_EQ(theta(normal_word(w)), DPoly(w));
        ++count;
        if (cur.size() == 3) return;
        for (std::size_t k = from; k < kinds.size(); ++k) {
          if (deg + kinds[k].degree > 3) continue;
          cur.push_back(kinds[k]);
          walk(k, cur, deg + kinds[k].degree);
          cur.pop_back();
        }
      };
  std::vector<Factor> cur;
  walk(0, cur, 0);
  EXPECT_GT(count, 50u);
}

TEST(DgdnpNormalize, Examples) {
  EXPECT_EQ(dgdnp_normalize(T("a@(b@c)")),
            DP({{DW({{0, a}, {1, b}, {1, c}}), 1}, {DW({{0, a}, {0, b}, {2, c}}), 1}}));
  EXPECT_EQ(dgdnp_normalize(T("a*b")), DPoly(DW({{0, a}, {0, b}})));
  const DPoly p = dgdnp_normalize(T("e@((e@a)*b)"));
  for (const auto& [w, k] : p) EXPECT_EQ(w.size(), 2u);
}
