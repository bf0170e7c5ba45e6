#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gdnp/admissible.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

/// Truncation of kC[X] by word shape.
struct Bounds {
  std::size_t max_len = 4;     // factor count n
  std::uint32_t max_deg = 2;   // total D-degree
};

bool within(const CWord& w, const Bounds& b);
bool within(const CPoly& p, const Bounds& b);

/// Every basis word over `gens` ∪ {e} inside the bounds, ascending by ord.
std::vector<CWord> words_within(const std::vector<Letter>& gens, const Bounds& b);

/// Elements w · D^t(s) (w a word over gens, t ≥ 0, s ∈ S) that are nonzero and
/// lie entirely inside the bounds. Ordered by s, then t, then w ascending.
std::vector<CPoly> ideal_span_C(const std::vector<CPoly>& relations, const Bounds& b,
                                const std::vector<Letter>& gens);

/// The elements of ideal_span_C whose leading word has weight 0.
/// Throws NotWeightZero if a relation is not in GDNP_0(X).
std::vector<CPoly> ideal_span_GDNP0(const std::vector<CPoly>& relations, const Bounds& b,
                                    const std::vector<Letter>& gens);

/// Total order used to pick pivots during row reduction.
using WordOrder = std::function<std::strong_ordering(const CWord&, const CWord&)>;

/// Fully interreduced echelon basis of the span: each row is monic in its
/// pivot (its largest word under `order`), and no pivot occurs in another
/// row. Rows are returned by descending pivot.
std::vector<CPoly> reduce(const std::vector<CPoly>& basis, const WordOrder& order = compare_ord);

/// Remainder of p modulo an echelon basis produced by reduce() with the same order.
CPoly reduce_by(const CPoly& p, const std::vector<CPoly>& echelon,
                const WordOrder& order = compare_ord);

enum class Ambient { C, GDNP0 };

/// True iff f lies in the span of the ideal's elements at bound b. A false
/// answer only means no certificate exists at this bound.
bool member(const CPoly& f, const std::vector<CPoly>& relations, const Bounds& b,
            const std::vector<Letter>& gens, Ambient where);

struct PbwReport {
  std::size_t gdnp0_rank = 0;    // rank of the weight-0 ideal span
  std::size_t c_weight0_rank = 0;  // dimension of Id[S] ∩ weight 0 at the bound
  std::size_t c_rank = 0;          // rank of the full bounded ideal span
  bool included = false;           // weight-0 span lies in the full span
  bool consistent = false;         // equal ranks and inclusion
};

/// Compares the weight-0 part of the bounded ideal generated by the
/// relations in kC[X] with the span of its weight-0 generators. Relations
/// must be weight 0 (images of GDNP elements).
PbwReport pbw_check(const std::vector<CPoly>& relations, const Bounds& b,
                    const std::vector<Letter>& gens);
PbwReport pbw_check(const std::vector<Term>& relations, const Bounds& b,
                    const std::vector<Letter>& gens);

/// Dimension of the multigraded component (X-letters, ∘-count). Counts both
/// tableaux and weight-0 words and throws std::logic_error if they differ.
std::size_t graded_dim(const Monomial& xletters, std::size_t circ);

}  // namespace gdnp
