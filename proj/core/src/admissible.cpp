#include "gdnp/admissible.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gdnp/errors.hpp"

namespace gdnp {

namespace {

constexpr Factor kUnitFactor{0, Letter::unit()};

void trim_trailing_units(std::vector<Factor>& factors, std::size_t star_count) {
  while (factors.size() > star_count && factors.back() == kUnitFactor) factors.pop_back();
}

std::vector<Factor> merge_factors(const CWord& a, const CWord& b) {
  std::vector<Factor> out(a.size() + b.size());
  std::merge(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
             out.begin(), std::greater<>());
  return out;
}

}  // namespace

CWord::CWord() : factors_{kUnitFactor}, star_(1) {}

CWord::CWord(std::vector<Factor> factors, std::size_t star_count)
    : factors_(std::move(factors)), star_(star_count) {
  if (factors_.empty()) throw InvalidWord("a C[X] word needs at least one factor");
  if (star_ < 1 || star_ > factors_.size()) {
    throw InvalidWord("star count " + std::to_string(star_) + " outside [1, " +
                      std::to_string(factors_.size()) + "]");
  }
  std::sort(factors_.begin(), factors_.end(), std::greater<>());
  if (star_ < factors_.size() && factors_.back() == kUnitFactor) {
    throw InvalidWord("trailing (0,e) factor after the star block");
  }
}

CWord CWord::canonical(std::vector<Factor> factors, std::size_t star_count) {
  std::sort(factors.begin(), factors.end(), std::greater<>());
  trim_trailing_units(factors, star_count);
  CWord w;
  w.factors_ = std::move(factors);
  w.star_ = star_count;
  return w;
}

std::uint32_t CWord::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.degree;
  return d;
}

Monomial CWord::x_letters() const {
  std::vector<Letter> out;
  for (const auto& f : factors_) out.push_back(f.letter);
  return Monomial(std::move(out));
}

std::strong_ordering compare_ord(const CWord& w1, const CWord& w2) {
  if (auto c = w1.star_count() <=> w2.star_count(); c != 0) return c;
  // The -1 sentinel makes a proper prefix the smaller key.
  return std::lexicographical_compare_three_way(w1.factors().begin(), w1.factors().end(),
                                                w2.factors().begin(), w2.factors().end());
}

std::int64_t weight(const CWord& w) {
  return static_cast<std::int64_t>(w.degree()) - static_cast<std::int64_t>(w.star_count() - 1);
}

CWord dot(const CWord& w1, const CWord& w2) {
  return CWord::canonical(merge_factors(w1, w2), w1.star_count() + w2.star_count() - 1);
}

CWord star(const CWord& w1, const CWord& w2) {
  return CWord::canonical(merge_factors(w1, w2), w1.star_count() + w2.star_count());
}

CPoly derive(const CWord& w) {
  std::vector<CPoly::Term> raw;
  raw.reserve(w.size() + 1);
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto f = w.factors();
    ++f[t].degree;
    raw.emplace_back(CWord::canonical(std::move(f), w.star_count()), Rational(1));
  }
  if (const std::size_t m = w.dot_count(); m > 0) {
    raw.emplace_back(dot(w, CWord::letter(Letter::unit(), 1)), -Rational(m));
  }
  return CPoly::from_unsorted(std::move(raw));
}

CPoly poly_add(const CPoly& p, const CPoly& q) { return p + q; }

CPoly poly_scale(const Rational& c, const CPoly& p) { return c * p; }

CPoly poly_mul(Product kind, const CPoly& p, const CPoly& q) {
  std::vector<CPoly::Term> raw;
  raw.reserve(p.size() * q.size());
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) {
      raw.emplace_back(kind == Product::Dot ? dot(u, v) : star(u, v), a * b);
    }
  }
  return CPoly::from_unsorted(std::move(raw));
}

CPoly poly_derive(const CPoly& p) {
  std::vector<CPoly::Term> raw;
  for (const auto& [w, c] : p) {
    for (const auto& [v, d] : derive(w)) raw.emplace_back(v, c * d);
  }
  return CPoly::from_unsorted(std::move(raw));
}

std::pair<CWord, Rational> leading(const CPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("leading word of the zero polynomial");
  return p.leading();
}

bool is_weight0(const CPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& t) { return weight(t.first) == 0; });
}

namespace {

// Distributes degrees over the letters of `pool` (a non-increasing letter
// list, unit letters allowed) so that the total is `remaining`; letters equal
// to their predecessor take non-increasing degrees so each multiset appears once.
void assign_degrees(const std::vector<Letter>& pool, std::size_t k, std::uint32_t remaining,
                    std::vector<Factor>& cur, std::vector<std::vector<Factor>>& out) {
  if (k == pool.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  std::uint32_t cap = remaining;
  if (k > 0 && pool[k] == pool[k - 1]) cap = std::min(cap, cur.back().degree);
  for (std::uint32_t d = 0; d <= cap; ++d) {
    cur.push_back(Factor{d, pool[k]});
    assign_degrees(pool, k + 1, remaining - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CWord> weight0_words(const Monomial& xletters, std::uint32_t degree) {
  const std::size_t j = degree + 1;
  std::vector<CWord> out;
  for (std::size_t units = 0; units <= j; ++units) {
    std::vector<Letter> pool = xletters.letters();
    pool.insert(pool.end(), units, Letter::unit());
    if (pool.size() < j) continue;
    std::vector<std::vector<Factor>> assignments;
    std::vector<Factor> cur;
    assign_degrees(pool, 0, degree, cur, assignments);
    for (auto& f : assignments) {
      std::sort(f.begin(), f.end(), std::greater<>());
      if (j < f.size() && f.back() == kUnitFactor) continue;
      out.emplace_back(std::move(f), j);
    }
  }
  std::sort(out.begin(), out.end(), OrdLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gdnp
