#include "gdnp/embedding.hpp"

#include <algorithm>
#include <functional>

#include "gdnp/errors.hpp"

namespace gdnp {

CPoly circ(const CPoly& f, const CPoly& g) { return poly_mul(Product::Star, f, poly_derive(g)); }

CPoly phi(const Term& t) {
  switch (t.op()) {
    case Op::Leaf:
      return word_poly(CWord::letter(t.letter()));
    case Op::Dot:
      return poly_mul(Product::Dot, phi(t.left()), phi(t.right()));
    case Op::Circ:
      return circ(phi(t.left()), phi(t.right()));
  }
  return {};
}

CPoly phi(const TableauCombo& combo) {
  CPoly out;
  for (const auto& [tb, c] : combo) out.add_scaled(phi(tableau_term(tb)), c);
  return out;
}

CWord tableau_leading(const Tableau& tb) {
  std::vector<Factor> factors;
  std::size_t star_count = 0;
  for (const auto& row : tb.rows) {
    factors.push_back(Factor{static_cast<std::uint32_t>(row.length()), row.tail});
    ++star_count;
  }
  factors.push_back(Factor{0, tb.head});
  ++star_count;
  for (const auto& row : tb.rows) {
    for (Letter a : row.body) {
      factors.push_back(Factor{0, a});
      ++star_count;
    }
  }
  for (Letter b : tb.dots.letters()) factors.push_back(Factor{0, b});
  return CWord(std::move(factors), star_count);
}

Tableau word_to_tableau(const CWord& w) {
  if (weight(w) != 0) {
    throw BadWeight("word_to_tableau: weight " + std::to_string(weight(w)) + ", expected 0");
  }
  const auto& f = w.factors();
  const std::size_t j = w.star_count();

  Tableau tb;
  std::size_t pos = 0;
  while (pos < j && f[pos].degree > 0) {
    Row row;
    row.tail = f[pos].letter;
    row.body.resize(f[pos].degree - 1);
    tb.rows.push_back(std::move(row));
    ++pos;
  }
  // Weight 0 leaves exactly 1 + Σ(r_i − 1) degree-0 letters in the star block.
  tb.head = f[pos++].letter;
  for (auto& row : tb.rows) {
    for (auto& slot : row.body) slot = f[pos++].letter;
  }
  std::vector<Letter> dots;
  for (; pos < f.size(); ++pos) dots.push_back(f[pos].letter);
  tb.dots = Monomial(std::move(dots));
  return tb;
}

const CPoly& Embedder::tableau_image(const Tableau& tb) {
  auto it = images_.find(tb);
  if (it == images_.end()) it = images_.emplace(tb, phi(tableau_term(tb))).first;
  return it->second;
}

TableauCombo Embedder::normalize_image(const CPoly& p) {
  if (!is_weight0(p)) throw NotWeightZero("normalize: polynomial is not in GDNP_0(X)");
  std::vector<TableauCombo::Term> out;
  CPoly rest = p;
  while (!rest.is_zero()) {
    const auto [w, alpha] = rest.leading();
    Tableau tb = word_to_tableau(w);
    const CPoly& image = tableau_image(tb);
    if (!(image.leading().first == w)) {
      throw std::logic_error("normalize: tableau image does not lead with the reconstructed word");
    }
    const Rational c = alpha / image.leading().second;
    rest.add_scaled(image, -c);
    out.emplace_back(std::move(tb), c);
  }
  return TableauCombo::from_unsorted(std::move(out));
}

TableauCombo normalize_embed(const Term& t) {
  Embedder e;
  return e.normalize(t);
}

}  // namespace gdnp
