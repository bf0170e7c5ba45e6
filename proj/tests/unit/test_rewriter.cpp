#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/generators.hpp"
#include "oracle.hpp"

using namespace gdnp;
using namespace fixtures;

namespace {

CPoly image(const TermCombo& c) {
  CPoly out;
  for (const auto& [t, k] : c) out.add_scaled(phi(t), k);
  return out;
}

CPoly image(const RowCombo& c) {
  CPoly out;
  for (const auto& [rf, k] : c) out.add_scaled(phi(rf.to_term()), k);
  return out;
}

RowForm R(const std::string& src) {
  auto rf = as_row_form(T(src));
  if (!rf) throw std::runtime_error("not a row form: " + src);
  return *rf;
}

constexpr SlotRef kHead{};

}  // namespace

TEST(SplitCirc, Examples) {
  EXPECT_EQ(split_circ(T("a@b")), std::make_pair(T("a"), T("b")));
  const auto [t1, t2] = split_circ(T("(a@b)*c"));
  EXPECT_EQ(t1, T("c*a"));
  EXPECT_EQ(t2, T("b"));
  EXPECT_EQ(phi(Term::circ(t1, t2)), phi(T("(a@b)*c")));
  EXPECT_THROW((void)split_circ(T("a*b")), NoCirc);
}

TEST(SplitCirc, PreservesImage) {
  Sampler s({a, b}, 41);
  for (int i = 0; i < 300; ++i) {
    const Term t = s.term_up_to(7);
    if (t.counts().circ == 0) continue;
    const auto [t1, t2] = split_circ(t);
    EXPECT_EQ(phi(Term::circ(t1, t2)), phi(t));
  }
}

TEST(RowForm, ReadsAndWritesTerms) {
  const RowForm rf = R("b*((a@(c@b))@a)");
  EXPECT_EQ(rf.head, M({b, a}));
  ASSERT_EQ(rf.rows.size(), 2u);
  EXPECT_EQ(rf.rows[0], (std::vector<Monomial>{M({c}), M({b})}));
  EXPECT_EQ(rf.rows[1], (std::vector<Monomial>{M({a})}));
  EXPECT_EQ(rf.circ_count(), 3u);
  EXPECT_EQ(rf.to_term(), T("((b*a)@(c@b))@a"));
  EXPECT_FALSE(as_row_form(T("(a@b)*(a@b)")).has_value());
  EXPECT_FALSE(as_row_form(T("a@((b@c)@a)")).has_value());
}

TEST(RowInterchange, LeftSymmetryStep) {
  const TermCombo out = row_interchange(R("c@(b@a)"), kHead, SlotRef{0, 0});
  const TermCombo expected = TermCombo::from_unsorted(
      {{T("b@(c@a)"), Rational(1)}, {T("(c@b)@a"), Rational(1)}, {T("(b@c)@a"), Rational(-1)}});
  EXPECT_EQ(out, expected);
}

TEST(RowInterchange, RightCommutativityStep) {
  EXPECT_EQ(row_interchange(R("(a@b)@c"), SlotRef{0, 0}, SlotRef{1, 0}), TermCombo(T("(a@c)@b")));
}

TEST(RowInterchange, AcrossRowsPreservesImageAndRaisesRoot) {
  const RowForm rf = R("(a@(b@(c@a)))@(c@b)");
  const Term before = rf.to_term();
  const TermCombo out = row_interchange(rf, SlotRef{0, 0}, SlotRef{1, 0});
  EXPECT_EQ(oracle::from_cpoly(image(out)), oracle::phi(before));
  const Term main = T("(a@(c@(c@a)))@(b@b)");
  EXPECT_NE(out.coefficient(main), 0);
  for (const auto& [t, k] : out) {
    EXPECT_EQ(t.counts().circ, before.counts().circ);
    EXPECT_EQ(x_letters(t), x_letters(before));
    if (t == main) {
      EXPECT_EQ(root(t), root(before));
    } else {
      EXPECT_GT(root(t), root(before));
    }
  }
}

TEST(RowInterchange, RandomStepsPreserveImage) {
  Sampler s({a, b, c}, 42);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Term t = s.term(7);
    const auto rf = as_row_form(t);
    if (!rf || rf->rows.empty()) continue;
    std::vector<SlotRef> slots{kHead};
    for (std::size_t r = 0; r < rf->rows.size(); ++r) {
      for (std::size_t k = 0; k + 1 < rf->rows[r].size(); ++k) slots.push_back(SlotRef{r, k});
    }
    if (slots.size() < 2) continue;
    const SlotRef x = slots[s.rng() % slots.size()];
    SlotRef y = slots[s.rng() % slots.size()];
    if (x.row == y.row && x.index == y.index) continue;
    const TermCombo out = row_interchange(*rf, x, y);
    EXPECT_EQ(image(out), phi(rf->to_term()));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(RowInterchange, BadPositions) {
  const RowForm rf = R("(a@(b@c))@a");
  EXPECT_THROW((void)row_interchange(rf, kHead, SlotRef{3, 0}), BadPosition);
  EXPECT_THROW((void)row_interchange(rf, kHead, SlotRef{0, 5}), BadPosition);
  EXPECT_THROW((void)row_interchange(rf, kHead, SlotRef{0, 1}), BadPosition);
  EXPECT_THROW((void)row_interchange(rf, SlotRef{0, 0}, SlotRef{0, 0}), BadPosition);
  EXPECT_THROW((void)row_interchange(rf, kHead, kHead), BadPosition);
}

TEST(Root1Expand, Examples) {
  EXPECT_EQ(root1_expand(M({a}), M({b, c})),
            TermCombo::from_unsorted({{Term::circ(M({a, c}).to_term(), T("b")), Rational(1)},
                                      {Term::circ(M({a, b}).to_term(), T("c")), Rational(1)},
                                      {Term::circ(M({a, b, c}).to_term(), T("e")), Rational(-1)}}));
  EXPECT_EQ(root1_expand(M({a}), M({b})), TermCombo(T("a@b")));
  EXPECT_EQ(root1_expand(Monomial(), M({b})), TermCombo(T("e@b")));
  EXPECT_THROW((void)root1_expand(M({a}), Monomial()), EmptyMonomial);
}

TEST(Root1Expand, PreservesImage) {
  const TermCombo out = root1_expand(M({a, b}), M({c, b, a}));
  EXPECT_EQ(image(out), phi(Term::circ(M({a, b}).to_term(), M({c, b, a}).to_term())));
}

TEST(ToRowForm, Examples) {
  const RowCombo out = to_row_form(T("a@(b@c)"));
  EXPECT_EQ(out, RowCombo::from_unsorted({{R("(a@c)@b"), Rational(1)},
                                          {R("b@(a@c)"), Rational(1)},
                                          {R("(b@c)@a"), Rational(-1)}}));
  EXPECT_EQ(to_row_form(T("(a@c)@b")), RowCombo(R("(a@c)@b")));
  EXPECT_EQ(to_row_form(T("a*b")), RowCombo(RowForm{M({a, b}), {}}));
}

TEST(ToRowForm, OutputsAreSortedAndGraded) {
  Sampler s({a, b}, 43);
  Rewriter rw;
  for (int i = 0; i < 200; ++i) {
    const Term t = s.term_up_to(7);
    const RowCombo out = rw.to_row_form(t);
    EXPECT_EQ(image(out), phi(t));
    for (const auto& [rf, k] : out) {
      const Term u = rf.to_term();
      EXPECT_GE(rf.root(), root(t));
      EXPECT_EQ(u.counts().circ, t.counts().circ);
      EXPECT_EQ(x_letters(u), x_letters(t));
      for (std::size_t r = 0; r + 1 < rf.rows.size(); ++r) {
        const auto& p = rf.rows[r];
        const auto& q = rf.rows[r + 1];
        EXPECT_GE(p.size(), q.size());
        if (p.size() == q.size()) EXPECT_TRUE(deglex_compare(p.back(), q.back()) >= 0);
      }
      std::vector<Monomial> chain{rf.head};
      for (const auto& row : rf.rows) chain.insert(chain.end(), row.begin(), row.end() - 1);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        EXPECT_TRUE(deglex_compare(chain[k], chain[k + 1]) >= 0);
      }
    }
  }
}

TEST(RootMax, Examples) {
  EXPECT_EQ(show(root_max(R("(a*b)@c"))), "a * b@c");
  EXPECT_EQ(show(root_max(R("a@b"))), "a@b");
  const RowForm rf = R("a@(b*c)");
  EXPECT_EQ(phi(root_max(rf)), phi(rf.to_term()));
  EXPECT_EQ(root_max(rf), normalize_embed(rf.to_term()));
  EXPECT_THROW((void)root_max(R("a@(b@c)")), BadShape);
}

TEST(NormalizeRewrite, Examples) {
  EXPECT_EQ(show(normalize_rewrite(T("(a@b)@c"))), "(a@c)@b");
  EXPECT_EQ(normalize_rewrite(T("a@(b@c)")), normalize_embed(T("a@(b@c)")));
  EXPECT_EQ(show(normalize_rewrite(T("(a*a)@b"))), "a * a@b");
}

TEST(NormalizeRewrite, AgreesWithEmbeddingUnderStepChecks) {
  Sampler s({a, b}, 44);
  Rewriter rw;
  rw.set_check_steps(true);
  Embedder emb;
  for (int i = 0; i < 150; ++i) {
    const Term t = s.term_up_to(7);
    EXPECT_EQ(rw.normalize(t), emb.normalize(t)) << show(t);
  }
}

TEST(NormalizeRewrite, ThreeGenerators) {
  Sampler s({a, b, c}, 45);
  Rewriter rw;
  Embedder emb;
  for (int i = 0; i < 100; ++i) {
    const Term t = s.term_up_to(8);
    EXPECT_EQ(rw.normalize(t), emb.normalize(t)) << show(t);
  }
}
