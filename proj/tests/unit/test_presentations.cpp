#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/presentations.hpp"
#include "oracle.hpp"

using namespace gdnp;
using namespace fixtures;

namespace {

const std::vector<Letter> kAB{a, b};

bool contains(const std::vector<CPoly>& list, const CPoly& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

TEST(WordsWithin, RespectBoundsAndAreDistinct) {
  const Bounds bd{3, 2};
  const auto words = words_within(kAB, bd);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end(), OrdLess{}));
  for (const auto& w : words) EXPECT_TRUE(within(w, bd));
  EXPECT_TRUE(std::find(words.begin(), words.end(), CWord()) != words.end());
  EXPECT_TRUE(std::find(words.begin(), words.end(), W("D(b) & a * a")) != words.end());
}

TEST(IdealSpanC, Examples) {
  const auto span = ideal_span_C({P("a & D(a)")}, Bounds{3, 2}, kAB);
  EXPECT_TRUE(contains(span, P("a & D(a)")));
  EXPECT_TRUE(contains(span, P("D^2(a) & a + D(a) & D(a)")));
  EXPECT_TRUE(ideal_span_C({}, Bounds{3, 2}, kAB).empty());

  const auto small = ideal_span_C({P("a")}, Bounds{2, 1}, kAB);
  EXPECT_TRUE(contains(small, P("a")));
  EXPECT_TRUE(contains(small, P("D(a)")));
  EXPECT_TRUE(contains(small, P("b * a")));
  for (const auto& p : small) EXPECT_TRUE(within(p, Bounds{2, 1}));
}

TEST(IdealSpanC, EveryElementIsAProductWithADerivative) {
  const CPoly s = P("a & D(a)");
  const Bounds bd{4, 2};
  for (const auto& p : ideal_span_C({s}, bd, kAB)) {
    bool found = false;
    CPoly ds = s;
    for (std::uint32_t t = 0; t <= bd.max_deg && !found; ++t, ds = poly_derive(ds)) {
      for (const auto& w : words_within(kAB, bd)) {
        if (poly_mul(Product::Dot, word_poly(w), ds) == p) {
          found = true;
          break;
        }
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(IdealSpanGDNP0, FiltersByWeight) {
  const auto span = ideal_span_GDNP0({phi(T("a@a"))}, Bounds{3, 2}, kAB);
  EXPECT_TRUE(contains(span, P("a & D(a)")));
  for (const auto& p : span) EXPECT_TRUE(is_weight0(p));
  const auto full = ideal_span_C({phi(T("a@a"))}, Bounds{3, 2}, kAB);
  EXPECT_LT(span.size(), full.size());
  EXPECT_TRUE(ideal_span_GDNP0({}, Bounds{3, 2}, kAB).empty());
  EXPECT_THROW((void)ideal_span_GDNP0({P("a & e")}, Bounds{3, 2}, kAB), NotWeightZero);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce({P("D(a)"), P("2 D(a)")}), (std::vector<CPoly>{P("D(a)")}));
  EXPECT_EQ(reduce({P("D(a) + a"), P("a")}), (std::vector<CPoly>{P("D(a)"), P("a")}));
  EXPECT_TRUE(reduce({}).empty());
}

TEST(Reduce, RankMatchesDenseElimination) {
  const auto span = ideal_span_C({phi(T("a@b")) - phi(T("b@a")), phi(T("a*a"))}, Bounds{3, 2}, kAB);
  const auto rows = reduce(span);
  EXPECT_EQ(rows.size(), oracle::rank(span));
  std::set<std::pair<std::vector<Factor>, std::size_t>> pivots;
  for (const auto& r : rows) {
    const CWord lead = r.leading().first;
    EXPECT_EQ(r.leading().second, 1);
    EXPECT_TRUE(pivots.insert({lead.factors(), lead.star_count()}).second);
    for (const auto& other : rows) {
      if (&other != &r) EXPECT_EQ(other.coefficient(lead), 0);
    }
  }
  for (const auto& p : span) EXPECT_TRUE(reduce_by(p, rows).is_zero());
}

TEST(Member, Examples) {
  const std::vector<CPoly> rel{phi(T("a@a"))};
  const Bounds bd{4, 2};
  EXPECT_TRUE(member(phi(T("a@a")), rel, bd, kAB, Ambient::GDNP0));
  EXPECT_TRUE(member(phi(T("(a@a)*b")), rel, bd, kAB, Ambient::GDNP0));
  EXPECT_FALSE(member(phi(T("a@b")), rel, bd, kAB, Ambient::GDNP0));
  EXPECT_FALSE(member(phi(T("a@b")), rel, bd, kAB, Ambient::C));
}

TEST(Member, NonMemberRaisesRank) {
  const std::vector<CPoly> rel{phi(T("a@a"))};
  auto span = ideal_span_C(rel, Bounds{4, 2}, kAB);
  const std::size_t r0 = oracle::rank(span);
  span.push_back(phi(T("a@b")));
  EXPECT_EQ(oracle::rank(span), r0 + 1);
}

TEST(Member, MonotoneInBounds) {
  const std::vector<CPoly> rel{phi(T("a@b")) - phi(T("b@a"))};
  const CPoly f = phi(T("(a@b)*a")) - phi(T("(b@a)*a"));
  EXPECT_TRUE(member(f, rel, Bounds{3, 1}, kAB, Ambient::C));
  EXPECT_TRUE(member(f, rel, Bounds{4, 2}, kAB, Ambient::C));
}

TEST(PbwCheck, Examples) {
  const Bounds bd{4, 2};
  const PbwReport r1 = pbw_check({T("a@a")}, bd, kAB);
  EXPECT_TRUE(r1.consistent);
  EXPECT_EQ(r1.gdnp0_rank, r1.c_weight0_rank);
  EXPECT_GT(r1.gdnp0_rank, 0u);

  const PbwReport r0 = pbw_check(std::vector<Term>{}, bd, kAB);
  EXPECT_TRUE(r0.consistent);
  EXPECT_EQ(r0.gdnp0_rank, 0u);
  EXPECT_EQ(r0.c_weight0_rank, 0u);
}

TEST(PbwCheck, CommutatorRelation) {
  const Bounds bd{4, 2};
  const std::vector<CPoly> rel{phi(T("a@b")) - phi(T("b@a"))};
  const PbwReport r = pbw_check(rel, bd, kAB);
  EXPECT_TRUE(r.consistent);

  std::vector<CPoly> c_weight0;
  for (const auto& p : ideal_span_C(rel, bd, kAB)) {
    CPoly part;
    for (const auto& [w, k] : p) {
      if (weight(w) == 0) part.add(w, k);
    }
    if (!part.is_zero()) c_weight0.push_back(part);
  }
  EXPECT_EQ(r.gdnp0_rank, oracle::rank(ideal_span_GDNP0(rel, bd, kAB)));
  EXPECT_EQ(r.c_weight0_rank, oracle::rank(c_weight0));
}

TEST(GradedDim, Examples) {
  EXPECT_EQ(graded_dim(M({a, a}), 1), 2u);
  EXPECT_EQ(graded_dim(M({a}), 0), 1u);
  EXPECT_EQ(graded_dim(M({a}), 1), 2u);
}

TEST(GradedDim, DoubleCountUpToThreeLettersAndThreeCircs) {
  const std::vector<Monomial> grades{Monomial(),     M({a}),       M({b}),       M({a, a}),
                                     M({b, a}),      M({b, b}),    M({a, a, a}), M({b, a, a}),
                                     M({b, b, a}),   M({b, b, b})};
  for (const auto& xl : grades) {
    std::vector<std::uint32_t> ranks;
    for (Letter l : xl.letters()) ranks.push_back(l.rank());
    for (std::size_t circ = 0; circ <= 3; ++circ) {
      EXPECT_EQ(graded_dim(xl, circ), oracle::count_weight0_words(ranks, static_cast<std::uint32_t>(circ)));
    }
  }
}
