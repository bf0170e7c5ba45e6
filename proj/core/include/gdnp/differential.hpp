#pragma once

#include <compare>
#include <vector>

#include "gdnp/admissible.hpp"
#include "gdnp/lincomb.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

/// Monomial D^{r_1}a_1 ⋯ D^{r_n}a_n of the free commutative differential
/// algebra k{X}, factors non-increasing, generators only. Empty is 1.
class DWord {
 public:
  DWord() = default;
  /// Sorts; throws InvalidWord if a factor uses the unit letter.
  explicit DWord(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_unit() const { return factors_.empty(); }

  friend bool operator==(const DWord&, const DWord&) = default;
  friend auto operator<=>(const DWord&, const DWord&) = default;

 private:
  std::vector<Factor> factors_;
};

using DPoly = LinComb<DWord>;

DWord dmul(const DWord& w1, const DWord& w2);
DPoly dmul(const DPoly& p, const DPoly& q);
DPoly dderive(const DPoly& p);

/// f ∘ g = f · D(g).
DPoly dcirc(const DPoly& f, const DPoly& g);

/// a ↦ a, e ↦ 1, · ↦ dmul, ∘ ↦ dcirc.
DPoly theta(const Term& t);

/// Dot product of the blocks [e ∘ (e ∘ ⋯ (e ∘ a))] (r copies of e), one per
/// factor D^r a, left-normed in the word's order; e for the empty word.
Term normal_word(const DWord& w);

/// Canonical form of t in the free differential GDNP algebra, as its
/// coordinates in the normal-word basis.
DPoly dgdnp_normalize(const Term& t);

}  // namespace gdnp
