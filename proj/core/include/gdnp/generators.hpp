#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gdnp/admissible.hpp"
#include "gdnp/differential.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

using Rng = std::mt19937_64;

/// Random seeded objects for property checks. `gens` never contains e; the
/// unit letter is added where the object allows it.
struct Sampler {
  std::vector<Letter> gens;
  Rng rng;

  Sampler(std::vector<Letter> generators, std::uint64_t seed)
      : gens(std::move(generators)), rng(seed) {}

  /// Word with 1..max_factors factors and total degree at most max_deg.
  CWord word(std::size_t max_factors, std::uint32_t max_deg);
  /// Up to max_terms words with small non-zero rational coefficients.
  CPoly cpoly(std::size_t max_terms, std::size_t max_factors, std::uint32_t max_deg);
  /// Term with exactly `leaves` leaves over gens ∪ {e}.
  Term term(std::size_t leaves);
  /// Term with between 1 and max_leaves leaves.
  Term term_up_to(std::size_t max_leaves);
  DWord dword(std::size_t max_factors, std::uint32_t max_deg);
  DPoly dpoly(std::size_t max_terms, std::size_t max_factors, std::uint32_t max_deg);
  Rational coefficient();

 private:
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  Letter any_letter();
};

/// Every term with exactly `leaves` leaves drawn from `letters`.
std::vector<Term> all_terms(const std::vector<Letter>& letters, std::size_t leaves);

}  // namespace gdnp
