#include "gdnp/differential.hpp"

#include <algorithm>
#include <functional>

#include "gdnp/errors.hpp"

namespace gdnp {

DWord::DWord(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.letter.is_unit()) throw InvalidWord("k{X} words use generators only");
  }
  std::sort(factors_.begin(), factors_.end(), std::greater<>());
}

DWord dmul(const DWord& w1, const DWord& w2) {
  std::vector<Factor> out(w1.size() + w2.size());
  std::merge(w1.factors().begin(), w1.factors().end(), w2.factors().begin(), w2.factors().end(),
             out.begin(), std::greater<>());
  return DWord(std::move(out));
}

DPoly dmul(const DPoly& p, const DPoly& q) {
  std::vector<DPoly::Term> raw;
  raw.reserve(p.size() * q.size());
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) raw.emplace_back(dmul(u, v), a * b);
  }
  return DPoly::from_unsorted(std::move(raw));
}

DPoly dderive(const DPoly& p) {
  std::vector<DPoly::Term> raw;
  for (const auto& [w, c] : p) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto f = w.factors();
      ++f[i].degree;
      raw.emplace_back(DWord(std::move(f)), c);
    }
  }
  return DPoly::from_unsorted(std::move(raw));
}

DPoly dcirc(const DPoly& f, const DPoly& g) { return dmul(f, dderive(g)); }

DPoly theta(const Term& t) {
  switch (t.op()) {
    case Op::Leaf:
      return t.letter().is_unit() ? DPoly(DWord{}) : DPoly(DWord({Factor{0, t.letter()}}));
    case Op::Dot:
      return dmul(theta(t.left()), theta(t.right()));
    case Op::Circ:
      return dcirc(theta(t.left()), theta(t.right()));
  }
  return {};
}

Term normal_word(const DWord& w) {
  if (w.is_unit()) return Term::unit();
  std::vector<Term> blocks;
  for (const auto& f : w.factors()) {
    Term block = Term::leaf(f.letter);
    for (std::uint32_t k = 0; k < f.degree; ++k) block = Term::circ(Term::unit(), block);
    blocks.push_back(std::move(block));
  }
  return left_normed(Op::Dot, blocks);
}

DPoly dgdnp_normalize(const Term& t) { return theta(t); }

}  // namespace gdnp
