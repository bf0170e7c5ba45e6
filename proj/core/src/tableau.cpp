#include "gdnp/tableau.hpp"

#include <algorithm>
#include <functional>

namespace gdnp {

namespace {

std::vector<Letter> chain_of(const Tableau& tb) {
  std::vector<Letter> chain{tb.head};
  for (const auto& row : tb.rows) chain.insert(chain.end(), row.body.begin(), row.body.end());
  return chain;
}

std::vector<std::size_t> lengths_of(const Tableau& tb) {
  std::vector<std::size_t> out;
  for (const auto& row : tb.rows) out.push_back(row.length());
  return out;
}

std::vector<Letter> tails_of(const Tableau& tb) {
  std::vector<Letter> out;
  for (const auto& row : tb.rows) out.push_back(row.tail);
  return out;
}

void flatten_dots(const Term& t, std::vector<Term>& out) {
  if (t.op() == Op::Dot) {
    flatten_dots(t.left(), out);
    flatten_dots(t.right(), out);
  } else {
    out.push_back(t);
  }
}

std::optional<Row> parse_row(Term t) {
  Row row;
  while (t.op() == Op::Circ) {
    if (!t.left().is_leaf()) return std::nullopt;
    row.body.push_back(t.left().letter());
    t = t.right();
  }
  if (!t.is_leaf()) return std::nullopt;
  row.tail = t.letter();
  return row;
}

}  // namespace

std::size_t Tableau::circ_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.length();
  return n;
}

Letter Tableau::chain_min() const {
  Letter mu = head;
  for (const auto& row : rows) {
    if (!row.body.empty()) mu = row.body.back();
  }
  return mu;
}

Monomial Tableau::x_letters() const {
  std::vector<Letter> all = dots.letters();
  all.push_back(head);
  for (const auto& row : rows) {
    all.insert(all.end(), row.body.begin(), row.body.end());
    all.push_back(row.tail);
  }
  return Monomial(std::move(all));
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  if (auto c = a.rows.size() <=> b.rows.size(); c != 0) return c;
  if (auto c = lengths_of(a) <=> lengths_of(b); c != 0) return c;
  if (auto c = chain_of(a) <=> chain_of(b); c != 0) return c;
  if (auto c = tails_of(a) <=> tails_of(b); c != 0) return c;
  return a.dots.letters() <=> b.dots.letters();
}

bool is_valid(const Tableau& tb) {
  for (std::size_t i = 0; i + 1 < tb.rows.size(); ++i) {
    const Row& r = tb.rows[i];
    const Row& s = tb.rows[i + 1];
    if (r.length() < s.length()) return false;
    if (r.length() == s.length() && r.tail < s.tail) return false;
  }
  const auto chain = chain_of(tb);
  if (!std::is_sorted(chain.begin(), chain.end(), std::greater<>())) return false;
  const Letter mu = chain.back();
  if (mu.is_unit()) return tb.dots.is_unit();
  return tb.dots.is_unit() || tb.dots.max() <= mu;
}

Term tableau_term(const Tableau& tb) {
  std::vector<Term> parts{Term::leaf(tb.head)};
  for (const auto& row : tb.rows) {
    std::vector<Term> slots;
    for (Letter a : row.body) slots.push_back(Term::leaf(a));
    slots.push_back(Term::leaf(row.tail));
    parts.push_back(right_normed(Op::Circ, slots));
  }
  Term w = left_normed(Op::Circ, parts);
  if (tb.dots.is_unit()) return w;
  std::vector<Term> factors;
  for (Letter b : tb.dots.letters()) factors.push_back(Term::leaf(b));
  factors.push_back(w);
  return left_normed(Op::Dot, factors);
}

std::optional<Tableau> as_tableau(const Term& t) {
  std::vector<Term> factors;
  flatten_dots(t, factors);

  std::vector<Term> circs;
  std::vector<Letter> leaves;
  for (const auto& f : factors) {
    if (f.is_leaf()) {
      leaves.push_back(f.letter());
    } else {
      circs.push_back(f);
    }
  }
  if (circs.size() > 1) return std::nullopt;

  Tableau tb;
  if (circs.empty()) {
    std::sort(leaves.begin(), leaves.end(), std::greater<>());
    if (leaves.size() > 1 && leaves.back().is_unit()) return std::nullopt;
    tb.head = leaves.front();
    tb.dots = Monomial(std::vector<Letter>(leaves.begin() + 1, leaves.end()));
  } else {
    if (std::any_of(leaves.begin(), leaves.end(), [](Letter a) { return a.is_unit(); })) {
      return std::nullopt;
    }
    tb.dots = Monomial(leaves);
    Term w = circs.front();
    std::vector<Term> row_terms;
    while (w.op() == Op::Circ) {
      row_terms.push_back(w.right());
      w = w.left();
    }
    if (!w.is_leaf()) return std::nullopt;
    tb.head = w.letter();
    for (auto it = row_terms.rbegin(); it != row_terms.rend(); ++it) {
      auto row = parse_row(*it);
      if (!row) return std::nullopt;
      tb.rows.push_back(std::move(*row));
    }
  }
  if (!is_valid(tb)) return std::nullopt;
  return tb;
}

namespace {

// Partitions of `total` into non-increasing parts, each at most `cap`.
void partitions(std::size_t total, std::size_t cap, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(total, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

struct SlotFiller {
  std::vector<std::size_t> lengths;
  std::vector<std::pair<Letter, std::size_t>> stock;  // distinct letters with remaining counts
  std::vector<Letter> slots;                          // tails, then head, then bodies
  std::vector<Tableau>* out;

  std::size_t slot_count() const {
    std::size_t n = lengths.size() + 1;
    for (auto r : lengths) n += r - 1;
    return n;
  }

  void fill(std::size_t k) {
    if (k == slot_count()) {
      emit();
      return;
    }
    // Unit letter is always available for a slot.
    place(k, Letter::unit());
    for (auto& [a, left] : stock) {
      if (left == 0) continue;
      --left;
      place(k, a);
      ++left;
    }
  }

  void place(std::size_t k, Letter a) {
    slots.push_back(a);
    fill(k + 1);
    slots.pop_back();
  }

  void emit() {
    Tableau tb;
    const std::size_t n = lengths.size();
    std::size_t pos = n;
    tb.head = slots[pos++];
    for (std::size_t i = 0; i < n; ++i) {
      Row row;
      for (std::size_t j = 0; j + 1 < lengths[i]; ++j) row.body.push_back(slots[pos++]);
      row.tail = slots[i];
      tb.rows.push_back(std::move(row));
    }
    std::vector<Letter> rest;
    for (const auto& [a, left] : stock) rest.insert(rest.end(), left, a);
    tb.dots = Monomial(std::move(rest));
    if (is_valid(tb)) out->push_back(std::move(tb));
  }
};

}  // namespace

std::vector<Tableau> enumerate_tableaux(const Monomial& xletters, std::size_t circ) {
  std::vector<std::vector<std::size_t>> shapes;
  std::vector<std::size_t> cur;
  partitions(circ, circ, cur, shapes);

  std::vector<Tableau> out;
  for (const auto& shape : shapes) {
    SlotFiller filler;
    filler.lengths = shape;
    filler.out = &out;
    for (Letter a : xletters.letters()) {
      if (!filler.stock.empty() && filler.stock.back().first == a) {
        ++filler.stock.back().second;
      } else {
        filler.stock.emplace_back(a, 1);
      }
    }
    filler.fill(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gdnp
