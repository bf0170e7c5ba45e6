#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "gdnp/lincomb.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

/// D^degree(letter), compared lexicographically on (degree, letter).
struct Factor {
  std::uint32_t degree = 0;
  Letter letter;

  friend constexpr auto operator<=>(const Factor&, const Factor&) = default;
};

/// Basis word of kC[X]:
///   D^{i_1}a_1 ∗ ... ∗ D^{i_j}a_j · D^{i_{j+1}}a_{j+1} ⋯ D^{i_n}a_n
/// with factors non-increasing and, when j < n, a last factor other than (0,e).
class CWord {
 public:
  /// The unit word e.
  CWord();

  /// Sorts the factors; throws InvalidWord if star_count is outside [1, n] or
  /// a trailing (0,e) sits after the star block.
  CWord(std::vector<Factor> factors, std::size_t star_count);

  static CWord letter(Letter a, std::uint32_t degree = 0) {
    return CWord({Factor{degree, a}}, 1);
  }

  /// Value of the product y_1 ∗ ... ∗ y_j · y_{j+1} ⋯ y_n of the given factors
  /// as a basis word: sorts, then drops (0,e) factors beyond the star block.
  /// Precondition: 1 <= star_count <= factors.size().
  static CWord canonical(std::vector<Factor> factors, std::size_t star_count);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t star_count() const { return star_; }
  std::size_t size() const { return factors_.size(); }
  std::size_t dot_count() const { return factors_.size() - star_; }

  /// Σ degrees.
  std::uint32_t degree() const;
  /// X-letters of the word, non-increasing.
  Monomial x_letters() const;

  friend bool operator==(const CWord&, const CWord&) = default;

 private:
  std::vector<Factor> factors_;  // non-increasing
  std::size_t star_ = 1;
};

/// Total order by ord(w) = (|w|_∗, i_1, a_1, ..., i_n, a_n, -1).
std::strong_ordering compare_ord(const CWord& w1, const CWord& w2);

struct OrdLess {
  bool operator()(const CWord& a, const CWord& b) const { return compare_ord(a, b) < 0; }
};

/// Rational combination of CWords, iterated in ascending ord.
using CPoly = LinComb<CWord, OrdLess>;

/// wt(w) = Σ degrees − (j − 1).
std::int64_t weight(const CWord& w);

/// Operation (i): merged factors, star count j1 + j2 − 1, trailing (0,e) trimmed
/// beyond the star block.
CWord dot(const CWord& w1, const CWord& w2);
/// Operation (ii): merged factors, star count j1 + j2, same trimming.
CWord star(const CWord& w1, const CWord& w2);
/// Operation (iii): Σ_t (raise degree of factor t) − m · (w · De), m = dot factor count.
CPoly derive(const CWord& w);

enum class Product { Dot, Star };

CPoly poly_add(const CPoly& p, const CPoly& q);
CPoly poly_scale(const Rational& c, const CPoly& p);
CPoly poly_mul(Product kind, const CPoly& p, const CPoly& q);
CPoly poly_derive(const CPoly& p);

inline CPoly word_poly(const CWord& w, Rational c = Rational(1)) { return CPoly(w, std::move(c)); }

/// The ord-maximal word with its coefficient; throws ZeroPolynomial on 0.
std::pair<CWord, Rational> leading(const CPoly& p);

/// True iff every word of p has weight 0 (vacuously true for 0).
bool is_weight0(const CPoly& p);

/// All weight-0 words whose X-letters are `xletters` and whose total degree
/// is `degree`, sorted by ord.
std::vector<CWord> weight0_words(const Monomial& xletters, std::uint32_t degree);

}  // namespace gdnp
