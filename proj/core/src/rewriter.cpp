#include "gdnp/rewriter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gdnp/errors.hpp"

namespace gdnp {

namespace {

using Slots = std::vector<Monomial>;

Term row_term(std::span<const Monomial> slots) {
  std::vector<Term> parts;
  parts.reserve(slots.size());
  for (const auto& m : slots) parts.push_back(m.to_term());
  return right_normed(Op::Circ, parts);
}

Monomial monomial_of(const Term& t) { return Monomial(x_letters(t)); }

Monomial single(Letter a) { return Monomial({a}); }

bool deglex_greater(const Monomial& a, const Monomial& b) { return deglex_compare(a, b) > 0; }

// Rows by length, then tail, both non-increasing; full contents break ties so
// the result does not depend on the input order.
void sort_row_order(std::vector<Slots>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Slots& a, const Slots& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    if (auto c = deglex_compare(a.back(), b.back()); c != 0) return c > 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      if (auto c = deglex_compare(a[k], b[k]); c != 0) return c > 0;
    }
    return false;
  });
}

// Applies elementary steps to a row form, keeping the current main form and
// the accumulated remainder terms. Each step is an exact identity, so
// main + Σ remainders stays equal to the starting term.
class Derivation {
 public:
  Derivation(RowForm rf, bool check) : main(std::move(rf)), check_(check) {}

  RowForm main;
  std::vector<std::pair<Term, Rational>> remainders;

  // (H'x) ∘ (y ∘ Z) ∘ rest → (H'y) ∘ (x ∘ Z) ∘ rest, by left symmetry on row i.
  void swap_head(std::size_t i, const Monomial& x) {
    auto& row = main.rows[i];
    if (row.size() < 2) throw std::logic_error("swap_head: row has no body slot");
    if (!main.head.contains(x)) throw std::logic_error("swap_head: head lacks the requested part");
    const Monomial y = row[0];
    if (x == y) return;
    const CPoly before = snapshot();
    const std::size_t mark = remainders.size();
    const Monomial rest = main.head / x;
    const Term z = row_term(std::span<const Monomial>(row).subspan(1));
    std::vector<Term> others;
    for (std::size_t r = 0; r < main.rows.size(); ++r) {
      if (r != i) others.push_back(row_term(main.rows[r]));
    }
    auto emit = [&](const Monomial& p, const Monomial& q, int sign) {
      std::vector<Term> parts{Term::circ(Term::circ(p.to_term(), q.to_term()), z)};
      parts.insert(parts.end(), others.begin(), others.end());
      Term w = left_normed(Op::Circ, parts);
      if (!rest.is_unit()) w = Term::dot(rest.to_term(), w);
      remainders.emplace_back(std::move(w), Rational(sign));
    };
    emit(x, y, 1);
    emit(y, x, -1);
    main.head = rest * y;
    row[0] = x;
    verify(before, mark);
  }

  // Exchanges slots k and k+1 of row i; slot k+1 must not be the tail.
  void swap_in_row(std::size_t i, std::size_t k) {
    auto& row = main.rows[i];
    if (k + 2 >= row.size()) throw std::logic_error("swap_in_row: position reaches the tail");
    const Monomial x = row[k];
    const Monomial y = row[k + 1];
    if (x == y) return;
    const CPoly before = snapshot();
    const std::size_t mark = remainders.size();
    const Term z = row_term(std::span<const Monomial>(row).subspan(k + 2));
    auto emit = [&](const Monomial& p, const Monomial& q, int sign) {
      std::vector<Term> slots;
      for (std::size_t s = 0; s < k; ++s) slots.push_back(row[s].to_term());
      slots.push_back(Term::circ(Term::circ(p.to_term(), q.to_term()), z));
      std::vector<Term> parts{main.head.to_term()};
      for (std::size_t r = 0; r < main.rows.size(); ++r) {
        parts.push_back(r == i ? right_normed(Op::Circ, slots) : row_term(main.rows[r]));
      }
      remainders.emplace_back(left_normed(Op::Circ, parts), Rational(sign));
    };
    emit(x, y, 1);
    emit(y, x, -1);
    std::swap(row[k], row[k + 1]);
    verify(before, mark);
  }

  // Moves every body slot content into place: rows whose bodies already
  // match are left alone; the others are emptied into the head and refilled
  // from it, bottom slot first.
  void rearrange(const Monomial& head, const std::vector<Slots>& bodies) {
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < main.rows.size(); ++i) {
      const auto& row = main.rows[i];
      if (!std::equal(bodies[i].begin(), bodies[i].end(), row.begin())) touched.push_back(i);
    }
    for (std::size_t i : touched) {
      const std::size_t body_len = main.rows[i].size() - 1;
      for (std::size_t k = 0; k < body_len; ++k) {
        if (main.rows[i][k].is_unit()) continue;
        for (std::size_t p = k; p-- > 0;) swap_in_row(i, p);
        swap_head(i, Monomial{});
      }
    }
    for (std::size_t i : touched) {
      for (std::size_t k = bodies[i].size(); k-- > 0;) {
        const Monomial& t = bodies[i][k];
        if (t.is_unit()) continue;
        swap_head(i, t);
        for (std::size_t p = 0; p < k; ++p) swap_in_row(i, p);
      }
    }
    if (!(main.head == head)) throw std::logic_error("rearrange: head does not match its target");
  }

 private:
  CPoly snapshot() const { return check_ ? phi(main.to_term()) : CPoly{}; }

  void verify(const CPoly& before, std::size_t mark) const {
    if (!check_) return;
    CPoly after = phi(main.to_term());
    for (std::size_t r = mark; r < remainders.size(); ++r) {
      after.add_scaled(phi(remainders[r].first), remainders[r].second);
    }
    if (!(after == before)) throw std::logic_error("rewriting step changed the image in kC[X]");
  }

  bool check_;
};

// Rewrites every tail of size ≥ 2 with the root-1 expansion, applied to the
// slot directly above it (the head for a row of length 1).
RowCombo expand_tails(const RowForm& rf) {
  for (std::size_t i = 0; i < rf.rows.size(); ++i) {
    const auto& row = rf.rows[i];
    const Monomial& v = row.back();
    if (v.size() < 2) continue;
    const std::size_t len = row.size();
    auto with = [&](const Monomial& upper, const Monomial& tail) {
      RowForm out = rf;
      (len >= 2 ? out.rows[i][len - 2] : out.head) = upper;
      out.rows[i].back() = tail;
      return out;
    };
    const Monomial& u = len >= 2 ? row[len - 2] : rf.head;
    RowCombo out;
    for (Letter a : v.letters()) {
      const Monomial lone = single(a);
      out.add_scaled(expand_tails(with(u * (v / lone), lone)), Rational(1));
    }
    out.add_scaled(expand_tails(with(u * v, Monomial{})), -Rational(v.size() - 1));
    return out;
  }
  return RowCombo(rf);
}

RowForm single_row(const Slots& row) {
  RowForm out;
  out.head = row.front();
  if (row.size() > 1) out.rows.emplace_back(row.begin() + 1, row.end());
  return out;
}

class DepthGuard {
 public:
  explicit DepthGuard(std::size_t& depth) : depth_(depth) {
    if (++depth_ > kLimit) {
      --depth_;
      throw std::logic_error("rewriter: recursion depth limit exceeded");
    }
  }
  ~DepthGuard() { --depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  static constexpr std::size_t kLimit = 20000;
  std::size_t& depth_;
};

}  // namespace

std::size_t RowForm::circ_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

Term RowForm::to_term() const {
  std::vector<Term> parts{head.to_term()};
  for (const auto& row : rows) parts.push_back(row_term(row));
  return left_normed(Op::Circ, parts);
}

std::optional<RowForm> as_row_form(const Term& t) {
  std::vector<Term> factors;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term f = stack.back();
    stack.pop_back();
    if (f.op() == Op::Dot) {
      stack.push_back(f.right());
      stack.push_back(f.left());
    } else {
      factors.push_back(std::move(f));
    }
  }
  std::optional<Term> spine;
  std::vector<Letter> head;
  for (const auto& f : factors) {
    if (f.counts().circ == 0) {
      head.push_back(f.letter());
    } else if (spine) {
      return std::nullopt;
    } else {
      spine = f;
    }
  }
  RowForm out;
  if (spine) {
    Term w = *spine;
    std::vector<Term> row_terms;
    while (w.op() == Op::Circ) {
      row_terms.push_back(w.right());
      w = w.left();
    }
    if (w.counts().circ != 0) return std::nullopt;
    for (Letter a : x_letters(w)) head.push_back(a);
    for (auto it = row_terms.rbegin(); it != row_terms.rend(); ++it) {
      Slots row;
      Term r = *it;
      while (r.op() == Op::Circ) {
        if (r.left().counts().circ != 0) return std::nullopt;
        row.push_back(monomial_of(r.left()));
        r = r.right();
      }
      if (r.counts().circ != 0) return std::nullopt;
      row.push_back(monomial_of(r));
      out.rows.push_back(std::move(row));
    }
  }
  out.head = Monomial(std::move(head));
  return out;
}

std::pair<Term, Term> split_circ(const Term& t) {
  if (t.counts().circ == 0) throw NoCirc("split_circ: term has no ∘");
  if (t.op() == Op::Circ) return {t.left(), t.right()};
  std::vector<Term> factors;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term f = stack.back();
    stack.pop_back();
    if (f.op() == Op::Dot) {
      stack.push_back(f.right());
      stack.push_back(f.left());
    } else {
      factors.push_back(std::move(f));
    }
  }
  auto best = std::max_element(factors.begin(), factors.end(), [](const Term& a, const Term& b) {
    return a.counts().circ < b.counts().circ;
  });
  Term chosen = *best;
  factors.erase(best);
  factors.push_back(chosen.left());
  return {left_normed(Op::Dot, factors), chosen.right()};
}

TermCombo row_interchange(const RowForm& rf, SlotRef a, SlotRef b) {
  auto is_head = [](SlotRef s) { return s.row == SlotRef::head_row; };
  auto check = [&](SlotRef s) {
    if (is_head(s)) return;
    if (s.row >= rf.rows.size() || s.index >= rf.rows[s.row].size()) {
      throw BadPosition("row_interchange: slot (" + std::to_string(s.row) + ", " +
                        std::to_string(s.index) + ") does not exist");
    }
  };
  check(a);
  check(b);
  if (is_head(a) && is_head(b)) throw BadPosition("row_interchange: both positions are the head");
  if (!is_head(a) && !is_head(b) && a.row == b.row && a.index == b.index) {
    throw BadPosition("row_interchange: positions coincide");
  }
  auto is_tail = [&](SlotRef s) { return !is_head(s) && s.index + 1 == rf.rows[s.row].size(); };

  if (is_tail(a) || is_tail(b)) {
    if (is_tail(a) && is_tail(b) && rf.rows[a.row].size() == 1 && rf.rows[b.row].size() == 1) {
      RowForm out = rf;
      std::swap(out.rows[a.row], out.rows[b.row]);
      return TermCombo(out.to_term());
    }
    throw BadPosition("row_interchange: a tail can only trade places with another row of length 1");
  }

  Derivation d(rf, false);
  if (is_head(b)) std::swap(a, b);
  if (is_head(a) && b.index == 0) {
    d.swap_head(b.row, rf.head);
  } else if (!is_head(a) && a.row == b.row && (a.index + 1 == b.index || b.index + 1 == a.index)) {
    d.swap_in_row(a.row, std::min(a.index, b.index));
  } else {
    std::vector<Slots> bodies;
    for (const auto& row : rf.rows) bodies.emplace_back(row.begin(), row.end() - 1);
    Monomial head = rf.head;
    if (is_head(a)) {
      std::swap(head, bodies[b.row][b.index]);
    } else {
      std::swap(bodies[a.row][a.index], bodies[b.row][b.index]);
    }
    d.rearrange(head, bodies);
  }
  std::vector<TermCombo::Term> raw{{d.main.to_term(), Rational(1)}};
  raw.insert(raw.end(), d.remainders.begin(), d.remainders.end());
  return TermCombo::from_unsorted(std::move(raw));
}

TermCombo root1_expand(const Monomial& u, const Monomial& v) {
  if (v.is_unit()) throw EmptyMonomial("root1_expand: v must be a non-empty monomial");
  std::vector<TermCombo::Term> raw;
  for (Letter a : v.letters()) {
    raw.emplace_back(Term::circ((u * (v / single(a))).to_term(), Term::leaf(a)), Rational(1));
  }
  raw.emplace_back(Term::circ((u * v).to_term(), Term::unit()), -Rational(v.size() - 1));
  return TermCombo::from_unsorted(std::move(raw));
}

void Rewriter::clear() {
  row_memo_.clear();
  normal_memo_.clear();
  circ_memo_.clear();
  sort_memo_.clear();
  finish_memo_.clear();
}

RowCombo Rewriter::to_row_form(const Term& t) {
  const bool memo = t.leaves() <= memo_leaf_limit_;
  if (memo) {
    if (auto it = row_memo_.find(t); it != row_memo_.end()) return it->second;
  }
  const DepthGuard guard(depth_);
  RowCombo out;
  if (t.counts().circ == 0) {
    out = RowCombo(RowForm{monomial_of(t), {}});
  } else {
    const auto [t1, t2] = split_circ(t);
    const RowCombo a = to_row_form(t1);
    const RowCombo b = to_row_form(t2);
    for (const auto& [ra, ca] : a) {
      for (const auto& [rb, cb] : b) out.add_scaled(circ_rows(ra, rb), ca * cb);
    }
  }
  if (memo) row_memo_.emplace(t, out);
  return out;
}

RowCombo Rewriter::circ_rows(const RowForm& x, const RowForm& y) {
  const auto key = std::make_pair(x, y);
  if (auto it = circ_memo_.find(key); it != circ_memo_.end()) return it->second;
  const DepthGuard guard(depth_);
  RowCombo out;
  if (y.rows.size() <= 1) {
    RowForm joined = x;
    Slots row{y.head};
    if (!y.rows.empty()) row.insert(row.end(), y.rows[0].begin(), y.rows[0].end());
    joined.rows.push_back(std::move(row));
    out = sort_rows(joined);
  } else if (!x.rows.empty()) {
    // (X' ∘ C) ∘ Y = (X' ∘ Y) ∘ C
    RowForm rest = x;
    const RowForm last = single_row(rest.rows.back());
    rest.rows.pop_back();
    for (const auto& [r, c] : circ_rows(rest, y)) out.add_scaled(circ_rows(r, last), c);
  } else {
    // u ∘ (Y' ∘ B) = Y' ∘ (u ∘ B) + (u ∘ Y') ∘ B − (Y' ∘ u) ∘ B
    const RowForm u{x.head, {}};
    RowForm y1 = y;
    const Slots last_row = y1.rows.back();
    y1.rows.pop_back();
    const RowForm b = single_row(last_row);
    RowForm ub{x.head, {last_row}};
    out.add_scaled(circ_rows(y1, ub), Rational(1));
    for (const auto& [r, c] : circ_rows(u, y1)) out.add_scaled(circ_rows(r, b), c);
    for (const auto& [r, c] : circ_rows(y1, u)) out.add_scaled(circ_rows(r, b), -c);
  }
  circ_memo_.emplace(key, out);
  return out;
}

RowCombo Rewriter::sort_rows(const RowForm& rf) {
  if (auto it = sort_memo_.find(rf); it != sort_memo_.end()) return it->second;
  const DepthGuard guard(depth_);
  RowForm sorted = rf;
  sort_row_order(sorted.rows);

  Slots chain{sorted.head};
  for (const auto& row : sorted.rows) chain.insert(chain.end(), row.begin(), row.end() - 1);
  std::stable_sort(chain.begin(), chain.end(), deglex_greater);
  std::vector<Slots> bodies;
  std::size_t next = 1;
  for (const auto& row : sorted.rows) {
    bodies.emplace_back(chain.begin() + next, chain.begin() + next + row.size() - 1);
    next += row.size() - 1;
  }

  Derivation d(sorted, check_steps_);
  d.rearrange(chain.front(), bodies);
  RowCombo out(d.main);
  for (const auto& [term, c] : d.remainders) out.add_scaled(to_row_form(term), c);
  sort_memo_.emplace(rf, out);
  return out;
}

TableauCombo Rewriter::finish(const RowForm& rf) {
  if (auto it = finish_memo_.find(rf); it != finish_memo_.end()) return it->second;
  const DepthGuard guard(depth_);
  TableauCombo out;
  for (const auto& [expanded, coeff] : expand_tails(rf)) {
    RowForm sorted = expanded;
    sort_row_order(sorted.rows);

    std::vector<Letter> pool = sorted.head.letters();
    std::size_t body_slots = 0;
    for (const auto& row : sorted.rows) {
      body_slots += row.size() - 1;
      for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        pool.insert(pool.end(), row[k].letters().begin(), row[k].letters().end());
      }
    }
    std::sort(pool.begin(), pool.end(), std::greater<>());
    const std::size_t used = std::min(pool.size(), body_slots + 1);
    std::vector<Letter> chain(pool.begin(), pool.begin() + used);
    chain.resize(body_slots + 1, Letter::unit());
    std::vector<Letter> dots(pool.begin() + used, pool.end());

    std::vector<Slots> bodies;
    std::size_t next = 1;
    for (const auto& row : sorted.rows) {
      Slots b;
      for (std::size_t k = 0; k + 1 < row.size(); ++k) b.push_back(single(chain[next++]));
      bodies.push_back(std::move(b));
    }
    std::vector<Letter> head_letters = dots;
    head_letters.push_back(chain.front());

    Derivation d(sorted, check_steps_);
    d.rearrange(Monomial(std::move(head_letters)), bodies);

    Tableau tb;
    tb.head = chain.front();
    tb.dots = Monomial(std::move(dots));
    for (const auto& row : d.main.rows) {
      Row r;
      for (std::size_t k = 0; k + 1 < row.size(); ++k) r.body.push_back(row[k].max());
      r.tail = row.back().max();
      tb.rows.push_back(std::move(r));
    }
    out.add(tb, coeff);
    for (const auto& [term, c] : d.remainders) out.add_scaled(normalize(term), coeff * c);
  }
  finish_memo_.emplace(rf, out);
  return out;
}

TableauCombo Rewriter::root_max(const RowForm& rf) {
  for (const auto& row : rf.rows) {
    if (row.size() != 1) throw BadShape("root_max: every row must have length 1");
  }
  return finish(rf);
}

TableauCombo Rewriter::normalize(const Term& t) {
  const bool memo = t.leaves() <= memo_leaf_limit_;
  if (memo) {
    if (auto it = normal_memo_.find(t); it != normal_memo_.end()) return it->second;
  }
  const DepthGuard guard(depth_);
  TableauCombo out;
  for (const auto& [rf, c] : to_row_form(t)) out.add_scaled(finish(rf), c);
  if (memo) normal_memo_.emplace(t, out);
  return out;
}

RowCombo to_row_form(const Term& t) {
  Rewriter r;
  return r.to_row_form(t);
}

TableauCombo root_max(const RowForm& rf) {
  Rewriter r;
  return r.root_max(rf);
}

TableauCombo normalize_rewrite(const Term& t) {
  Rewriter r;
  return r.normalize(t);
}

}  // namespace gdnp
