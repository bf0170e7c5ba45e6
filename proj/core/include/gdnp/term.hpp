#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdnp {

/// A letter of X ∪ {e}. Rank 0 is the unit e; generators have ranks 1..n in
/// their declared ascending order, so the natural integer order is the
/// letter order (e below every generator).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(std::uint32_t rank) : rank_(rank) {}

  static constexpr Letter unit() { return Letter(0); }

  constexpr std::uint32_t rank() const { return rank_; }
  constexpr bool is_unit() const { return rank_ == 0; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t rank_ = 0;
};

/// The declared generator list; maps names to ranks and back.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws ParseError for names that are not identifiers, are reserved
  /// (`e`, `D`) or repeat.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Generator letter for `name`; `e` maps to the unit.
  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;  // throws ParseError if unknown
  std::string name(Letter a) const;

  /// All generators in ascending order.
  std::vector<Letter> generators() const;

 private:
  std::vector<std::string> names_;
};

enum class Op : std::uint8_t { Leaf, Circ, Dot };

/// Counting statistics of a term, additive over subtrees.
struct Counts {
  std::size_t circ = 0;   // |T|_∘
  std::size_t xcount = 0; // |T|_X
  std::size_t ecount = 0; // |T|_e
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Immutable word of the free {∘, ·}-algebra over X ∪ {e}. Nodes are shared;
/// statistics (counts, root number, hash) are computed once at construction.
class Term {
 public:
  static Term leaf(Letter a);
  static Term circ(Term left, Term right);
  static Term dot(Term left, Term right);
  static Term unit() { return leaf(Letter::unit()); }

  Op op() const { return node_->op; }
  bool is_leaf() const { return node_->op == Op::Leaf; }
  Letter letter() const { return node_->letter; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  const Counts& counts() const { return node_->counts; }
  std::size_t root() const { return node_->root; }
  std::size_t leaves() const { return node_->counts.xcount + node_->counts.ecount; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  /// Deterministic structural order: by leaf count, then operator, then
  /// lexicographically on the children.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Op op = Op::Leaf;
    Letter letter;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    Counts counts;
    std::size_t root = 0;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Op op, const Term& left, const Term& right);
  static bool equal(const Node* a, const Node* b);
  static std::strong_ordering compare(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// (|T|_∘, |T|_X, |T|_e).
inline Counts counts(const Term& t) { return t.counts(); }

/// Root number: r(a)=0, r(T1·T2)=r(T1)+r(T2), r(T1∘T2)=r(T1)+max{1, r(T2)}.
inline std::size_t root(const Term& t) { return t.root(); }

/// X-letters occurring in `t`, as a non-increasing sequence.
std::vector<Letter> x_letters(const Term& t);

/// [w1 δ w2 δ ... δ wn]_L and [...]_R for a single operator δ ∈ {∘, ·}.
Term left_normed(Op op, std::span<const Term> parts);
Term right_normed(Op op, std::span<const Term> parts);

/// Element of the commutative monoid [X]: a multiset of generators kept as a
/// non-increasing sequence. The empty monomial is the unit e.
class Monomial {
 public:
  Monomial() = default;
  /// Drops unit letters and sorts.
  explicit Monomial(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_unit() const { return letters_.empty(); }
  /// Largest letter, or e for the unit.
  Letter max() const { return letters_.empty() ? Letter::unit() : letters_.front(); }

  Monomial operator*(const Monomial& other) const;
  /// True when `part` is a sub-multiset; then `*this / part` is defined.
  bool contains(const Monomial& part) const;
  Monomial operator/(const Monomial& part) const;

  /// Left-normed dot product of the letters in non-increasing order; e when empty.
  Term to_term() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Structural (not deg-lex) order for use as a container key.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Deg-lex order on [X]: longer is greater; equal lengths compare position by
/// position along the non-increasing sequences.
std::strong_ordering deglex_compare(const Monomial& u, const Monomial& v);

}  // namespace gdnp

template <>
struct std::hash<gdnp::Term> {
  std::size_t operator()(const gdnp::Term& t) const noexcept { return t.hash(); }
};
