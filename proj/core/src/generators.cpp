#include "gdnp/generators.hpp"

namespace gdnp {

Letter Sampler::any_letter() {
  const std::size_t k = below(gens.size() + 1);
  return k == 0 ? Letter::unit() : gens[k - 1];
}

Rational Sampler::coefficient() {
  const auto num = static_cast<long>(below(7)) - 3;
  const auto den = static_cast<long>(below(3)) + 1;
  return num == 0 ? Rational(1, den) : Rational(num, den);
}

CWord Sampler::word(std::size_t max_factors, std::uint32_t max_deg) {
  const std::size_t n = below(max_factors) + 1;
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < n; ++i) factors.push_back(Factor{0, any_letter()});
  const auto total = static_cast<std::uint32_t>(below(max_deg + 1));
  for (std::uint32_t d = 0; d < total; ++d) ++factors[below(n)].degree;
  return CWord::canonical(std::move(factors), below(n) + 1);
}

CPoly Sampler::cpoly(std::size_t max_terms, std::size_t max_factors, std::uint32_t max_deg) {
  std::vector<CPoly::Term> raw;
  const std::size_t n = below(max_terms) + 1;
  for (std::size_t i = 0; i < n; ++i) raw.emplace_back(word(max_factors, max_deg), coefficient());
  return CPoly::from_unsorted(std::move(raw));
}

Term Sampler::term(std::size_t leaves) {
  if (leaves <= 1) return Term::leaf(any_letter());
  const std::size_t left = below(leaves - 1) + 1;
  Term l = term(left);
  Term r = term(leaves - left);
  return below(2) == 0 ? Term::circ(std::move(l), std::move(r)) : Term::dot(std::move(l), std::move(r));
}

Term Sampler::term_up_to(std::size_t max_leaves) { return term(below(max_leaves) + 1); }

DWord Sampler::dword(std::size_t max_factors, std::uint32_t max_deg) {
  const std::size_t n = below(max_factors + 1);
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < n; ++i) factors.push_back(Factor{0, gens[below(gens.size())]});
  if (n > 0) {
    const auto total = static_cast<std::uint32_t>(below(max_deg + 1));
    for (std::uint32_t d = 0; d < total; ++d) ++factors[below(n)].degree;
  }
  return DWord(std::move(factors));
}

DPoly Sampler::dpoly(std::size_t max_terms, std::size_t max_factors, std::uint32_t max_deg) {
  std::vector<DPoly::Term> raw;
  const std::size_t n = below(max_terms) + 1;
  for (std::size_t i = 0; i < n; ++i) raw.emplace_back(dword(max_factors, max_deg), coefficient());
  return DPoly::from_unsorted(std::move(raw));
}

std::vector<Term> all_terms(const std::vector<Letter>& letters, std::size_t leaves) {
  std::vector<std::vector<Term>> by_size(leaves + 1);
  for (Letter a : letters) by_size[1].push_back(Term::leaf(a));
  for (std::size_t n = 2; n <= leaves; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& l : by_size[k]) {
        for (const auto& r : by_size[n - k]) {
          by_size[n].push_back(Term::circ(l, r));
          by_size[n].push_back(Term::dot(l, r));
        }
      }
    }
  }
  return leaves == 0 ? std::vector<Term>{} : by_size[leaves];
}

}  // namespace gdnp
