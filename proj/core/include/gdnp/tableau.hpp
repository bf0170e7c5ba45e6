#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "gdnp/term.hpp"

namespace gdnp {

/// One right-normed row [a_r ∘ (... ∘ (a_2 ∘ a_1))]: `body` lists a_r..a_2
/// from the top down, `tail` is a_1. Its length r is body.size() + 1.
struct Row {
  std::vector<Letter> body;
  Letter tail;

  std::size_t length() const { return body.size() + 1; }
  friend bool operator==(const Row&, const Row&) = default;
};

/// GDN-Poisson tableau b_1 ⋯ b_m · [head ∘ A_1 ∘ ... ∘ A_n]_L.
///
/// Invariants (see is_valid):
///   - rows are non-increasing in length; equal lengths have non-increasing tails;
///   - head, body_1, ..., body_n read in order form a non-increasing chain;
///   - the last chain letter µ bounds every dot letter, and µ = e forces no dots.
struct Tableau {
  Monomial dots;
  Letter head;
  std::vector<Row> rows;

  /// Σ r_i, the number of ∘ in the tableau term.
  std::size_t circ_count() const;
  /// Last letter of the chain head, body_1, ..., body_n.
  Letter chain_min() const;
  /// All X-letters (dots, head, bodies, tails), non-increasing.
  Monomial x_letters() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Deterministic order on tableaux: (n, row lengths, chain letters, tails, dots).
std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

bool is_valid(const Tableau& tb);

/// Term form: dots (non-increasing, left-normed) times the left-normed ∘-product
/// of the head with the right-normed rows.
Term tableau_term(const Tableau& tb);

/// Recognizes tableau terms, accepting any association and commutation of
/// the dot factors. Returns nullopt when `t` is not a valid tableau term.
std::optional<Tableau> as_tableau(const Term& t);

/// Every tableau whose X-letter multiset is `xletters` and with Σ r_i = circ,
/// sorted ascending.
std::vector<Tableau> enumerate_tableaux(const Monomial& xletters, std::size_t circ);

}  // namespace gdnp
