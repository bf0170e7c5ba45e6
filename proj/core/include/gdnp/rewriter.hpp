#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gdnp/embedding.hpp"
#include "gdnp/lincomb.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

/// [u ∘ A_1 ∘ ... ∘ A_n]_L with monomial slots, where each row
/// A_i = [u_{i,r_i} ∘ ... ∘ u_{i,1}]_R is listed top-down (back() is the tail).
/// The head monomial u also carries any dot factors, since
/// b·[u ∘ ...]_L = [(b·u) ∘ ...]_L.
struct RowForm {
  Monomial head;
  std::vector<std::vector<Monomial>> rows;

  /// Σ row lengths = |T|_∘ of the term.
  std::size_t circ_count() const;
  /// Root number of the term, which is the number of rows.
  std::size_t root() const { return rows.size(); }
  Term to_term() const;

  friend bool operator==(const RowForm&, const RowForm&) = default;
  friend auto operator<=>(const RowForm&, const RowForm&) = default;
};

using RowCombo = LinComb<RowForm>;
using TermCombo = LinComb<Term>;

/// Reads a term of row shape (dot factors of leaves are folded into the
/// head). Returns nullopt for other shapes.
std::optional<RowForm> as_row_form(const Term& t);

/// T = T1 ∘ T2 as an exact identity. A top-level dot product pulls a ∘ up
/// through (x·y)∘z = x·(y∘z): the factor with the most ∘ is split, and the
/// remaining factors multiply its left side. Throws NoCirc when |T|_∘ = 0.
std::pair<Term, Term> split_circ(const Term& t);

/// Address of a slot in a RowForm: `row == head_row` for the head monomial,
/// otherwise `index` counts from the top of the row (0) to its tail.
struct SlotRef {
  static constexpr std::size_t head_row = std::numeric_limits<std::size_t>::max();
  std::size_t row = head_row;
  std::size_t index = 0;
};

/// One rewriting step T → T': exchanges the contents of two non-tail slots
/// and returns T' + Σ α_i T_i, where every T_i has larger root than T' and the
/// same |·|_∘ and |·|_X. Two tails may be exchanged only when both rows have
/// length 1 (a row permutation, no remainder). Throws BadPosition otherwise.
TermCombo row_interchange(const RowForm& rf, SlotRef a, SlotRef b);

/// u ∘ (a_1 ⋯ a_n) = Σ_i (u a_1 ⋯ â_i ⋯ a_n) ∘ a_i − (n−1)(u a_1 ⋯ a_n) ∘ e,
/// returned as the right-hand side. Throws EmptyMonomial when v = e.
TermCombo root1_expand(const Monomial& u, const Monomial& v);

/// Direct rewriting normalizer. Intermediate results are memoized, so one
/// instance should be reused across calls; not thread-safe.
class Rewriter {
 public:
  /// Terms with more than `memo_leaf_limit` leaves are not memoized.
  explicit Rewriter(std::size_t memo_leaf_limit = 10) : memo_leaf_limit_(memo_leaf_limit) {}

  /// Verify after every elementary step that the image in kC[X] is unchanged.
  void set_check_steps(bool on) { check_steps_ = on; }

  /// Combination of sorted row forms: rows by (length, tail) non-increasing,
  /// slot chain non-increasing in deg-lex order; each with root ≥ r(T).
  RowCombo to_row_form(const Term& t);

  /// Tableau expansion of a row form whose rows all have length 1.
  /// Throws BadShape otherwise.
  TableauCombo root_max(const RowForm& rf);

  TableauCombo normalize(const Term& t);

  void clear();

 private:
  RowCombo circ_rows(const RowForm& a, const RowForm& b);
  RowCombo sort_rows(const RowForm& rf);
  TableauCombo finish(const RowForm& rf);

  std::size_t memo_leaf_limit_;
  bool check_steps_ = false;
  std::size_t depth_ = 0;
  std::unordered_map<Term, RowCombo, TermHash> row_memo_;
  std::unordered_map<Term, TableauCombo, TermHash> normal_memo_;
  std::map<std::pair<RowForm, RowForm>, RowCombo> circ_memo_;
  std::map<RowForm, RowCombo> sort_memo_;
  std::map<RowForm, TableauCombo> finish_memo_;
};

RowCombo to_row_form(const Term& t);
TableauCombo root_max(const RowForm& rf);
TableauCombo normalize_rewrite(const Term& t);

}  // namespace gdnp
