#include "gdnp/presentations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gdnp/embedding.hpp"
#include "gdnp/errors.hpp"
#include "gdnp/tableau.hpp"

namespace gdnp {

bool within(const CWord& w, const Bounds& b) {
  return w.size() <= b.max_len && w.degree() <= b.max_deg;
}

bool within(const CPoly& p, const Bounds& b) {
  return std::all_of(p.begin(), p.end(), [&](const auto& t) { return within(t.first, b); });
}

namespace {

void grow(const std::vector<Factor>& kinds, std::size_t from, const Bounds& b,
          std::vector<Factor>& cur, std::uint32_t deg, std::vector<CWord>& out) {
  if (!cur.empty()) {
    const bool trailing_unit = cur.back() == Factor{0, Letter::unit()};
    for (std::size_t j = 1; j <= cur.size(); ++j) {
      if (trailing_unit && j < cur.size()) continue;
      out.emplace_back(cur, j);
    }
  }
  if (cur.size() == b.max_len) return;
  for (std::size_t k = from; k < kinds.size(); ++k) {
    if (deg + kinds[k].degree > b.max_deg) continue;
    cur.push_back(kinds[k]);
    grow(kinds, k, b, cur, deg + kinds[k].degree, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CWord> words_within(const std::vector<Letter>& gens, const Bounds& b) {
  std::vector<Letter> letters{Letter::unit()};
  letters.insert(letters.end(), gens.begin(), gens.end());
  std::vector<Factor> kinds;
  for (std::uint32_t d = 0; d <= b.max_deg; ++d) {
    for (Letter a : letters) kinds.push_back(Factor{d, a});
  }
  std::sort(kinds.begin(), kinds.end(), std::greater<>());
  std::vector<CWord> out;
  std::vector<Factor> cur;
  grow(kinds, 0, b, cur, 0, out);
  std::sort(out.begin(), out.end(), OrdLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CPoly> ideal_span_C(const std::vector<CPoly>& relations, const Bounds& b,
                                const std::vector<Letter>& gens) {
  const std::vector<CWord> words = words_within(gens, b);
  std::vector<CPoly> out;
  for (const auto& s : relations) {
    CPoly ds = s;
    for (std::uint32_t t = 0; t <= b.max_deg && !ds.is_zero(); ++t) {
      for (const auto& w : words) {
        CPoly p = poly_mul(Product::Dot, word_poly(w), ds);
        if (!p.is_zero() && within(p, b)) out.push_back(std::move(p));
      }
      ds = poly_derive(ds);
    }
  }
  return out;
}

std::vector<CPoly> ideal_span_GDNP0(const std::vector<CPoly>& relations, const Bounds& b,
                                    const std::vector<Letter>& gens) {
  for (const auto& s : relations) {
    if (!is_weight0(s)) throw NotWeightZero("ideal_span_GDNP0: relation is not in GDNP_0(X)");
  }
  std::vector<CPoly> out;
  for (auto& p : ideal_span_C(relations, b, gens)) {
    if (weight(p.leading().first) == 0) out.push_back(std::move(p));
  }
  return out;
}

namespace {

const CWord& pivot_of(const CPoly& p, const WordOrder& order) {
  const CWord* best = &p.begin()->first;
  for (const auto& [w, c] : p) {
    if (order(w, *best) > 0) best = &w;
  }
  return *best;
}

// Echelon rows keyed by pivot word, fully interreduced.
class Echelon {
 public:
  explicit Echelon(const WordOrder& order) : order_(order) {}

  CPoly remainder(const CPoly& p) const {
    CPoly r = p;
    for (const auto& [w, c] : p) {
      if (auto it = rows_.find(w); it != rows_.end()) r.add_scaled(it->second, -c);
    }
    return r;
  }

  void insert(const CPoly& p) {
    CPoly r = remainder(p);
    if (r.is_zero()) return;
    const CWord lead = pivot_of(r, order_);
    r = Rational(1) / r.coefficient(lead) * r;
    for (auto& [w, row] : rows_) {
      const Rational c = row.coefficient(lead);
      if (c != 0) row.add_scaled(r, -c);
    }
    rows_.emplace(lead, std::move(r));
  }

  std::vector<CPoly> rows() const {
    std::vector<std::pair<CWord, CPoly>> items(rows_.begin(), rows_.end());
    std::sort(items.begin(), items.end(),
              [&](const auto& x, const auto& y) { return order_(x.first, y.first) > 0; });
    std::vector<CPoly> out;
    for (auto& [w, row] : items) out.push_back(std::move(row));
    return out;
  }

 private:
  WordOrder order_;
  std::map<CWord, CPoly, OrdLess> rows_;
};

}  // namespace

std::vector<CPoly> reduce(const std::vector<CPoly>& basis, const WordOrder& order) {
  Echelon e(order);
  for (const auto& p : basis) {
    if (!p.is_zero()) e.insert(p);
  }
  return e.rows();
}

CPoly reduce_by(const CPoly& p, const std::vector<CPoly>& echelon, const WordOrder& order) {
  CPoly r = p;
  for (const auto& row : echelon) {
    const Rational k = r.coefficient(pivot_of(row, order));
    if (k != 0) r.add_scaled(row, -k);
  }
  return r;
}

bool member(const CPoly& f, const std::vector<CPoly>& relations, const Bounds& b,
            const std::vector<Letter>& gens, Ambient where) {
  const auto span = where == Ambient::C ? ideal_span_C(relations, b, gens)
                                        : ideal_span_GDNP0(relations, b, gens);
  Echelon e(compare_ord);
  for (const auto& p : span) e.insert(p);
  return e.remainder(f).is_zero();
}

PbwReport pbw_check(const std::vector<Term>& relations, const Bounds& b,
                    const std::vector<Letter>& gens) {
  std::vector<CPoly> images;
  for (const auto& t : relations) images.push_back(phi(t));
  return pbw_check(images, b, gens);
}

PbwReport pbw_check(const std::vector<CPoly>& relations, const Bounds& b,
                    const std::vector<Letter>& gens) {
  std::vector<CPoly> images;
  for (const auto& p : relations) {
    if (!p.is_zero()) images.push_back(p);
  }
  PbwReport report;
  const auto gdnp0 = ideal_span_GDNP0(images, b, gens);
  report.gdnp0_rank = reduce(gdnp0).size();

  // Weight-0 words sort below all others, so rows pivoting on a weight-0
  // word span exactly the weight-0 part of the ideal at this bound.
  const WordOrder weight_first = [](const CWord& x, const CWord& y) {
    const bool xz = weight(x) == 0;
    const bool yz = weight(y) == 0;
    if (xz != yz) return xz ? std::strong_ordering::less : std::strong_ordering::greater;
    return compare_ord(x, y);
  };
  Echelon full(weight_first);
  for (const auto& p : ideal_span_C(images, b, gens)) full.insert(p);
  const auto rows = full.rows();
  report.c_rank = rows.size();
  for (const auto& row : rows) {
    if (weight(pivot_of(row, weight_first)) == 0) ++report.c_weight0_rank;
  }
  report.included = std::all_of(gdnp0.begin(), gdnp0.end(),
                                [&](const CPoly& p) { return full.remainder(p).is_zero(); });
  report.consistent = report.included && report.gdnp0_rank == report.c_weight0_rank;
  return report;
}

std::size_t graded_dim(const Monomial& xletters, std::size_t circ) {
  const std::size_t tableaux = enumerate_tableaux(xletters, circ).size();
  const std::size_t words = weight0_words(xletters, static_cast<std::uint32_t>(circ)).size();
  if (tableaux != words) {
    throw std::logic_error("graded_dim: " + std::to_string(tableaux) + " tableaux but " +
                           std::to_string(words) + " weight-0 words");
  }
  return tableaux;
}

}  // namespace gdnp
