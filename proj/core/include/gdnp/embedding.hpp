#pragma once

#include <map>

#include "gdnp/admissible.hpp"
#include "gdnp/lincomb.hpp"
#include "gdnp/tableau.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

/// Rational combination of tableaux, i.e. an element of GDNP(X) in the
/// tableau basis.
using TableauCombo = LinComb<Tableau>;

/// f ∘ g := f ∗ D(g).
CPoly circ(const CPoly& f, const CPoly& g);

/// Homomorphic image in kC[X]: a ↦ a, · ↦ ·, ∘ ↦ circ.
CPoly phi(const Term& t);

/// Image of a tableau combination.
CPoly phi(const TableauCombo& combo);

/// Closed-form leading word of phi(tableau_term(tb)):
/// D^{r_1}tail_1 ∗ ... ∗ D^{r_n}tail_n ∗ head ∗ bodies · dots.
CWord tableau_leading(const Tableau& tb);

/// Inverse of tableau_leading on weight-0 words. Throws BadWeight otherwise.
Tableau word_to_tableau(const CWord& w);

/// Expresses weight-0 polynomials in the tableau basis by greedy
/// leading-word subtraction. Images of basis tableaux are cached, so one
/// instance should be reused across many calls; not thread-safe.
class Embedder {
 public:
  /// Throws NotWeightZero if `p` has a word of non-zero weight.
  TableauCombo normalize_image(const CPoly& p);
  TableauCombo normalize(const Term& t) { return normalize_image(phi(t)); }

  const CPoly& tableau_image(const Tableau& tb);

 private:
  std::map<Tableau, CPoly> images_;
};

/// Tableau expansion of `t` computed through the embedding into kC[X].
TableauCombo normalize_embed(const Term& t);

}  // namespace gdnp
