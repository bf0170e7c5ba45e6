#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "gdnp/rational.hpp"

namespace gdnp {

/// A finite rational linear combination of basis keys, stored as a vector
/// sorted ascending under `Less` with no zero coefficients. The last entry
/// is the leading (largest) key.
template <class Key, class Less = std::less<Key>>
class LinComb {
 public:
  using Term = std::pair<Key, Rational>;
  using const_iterator = typename std::vector<Term>::const_iterator;

  LinComb() = default;

  explicit LinComb(Key key, Rational coeff = Rational(1)) {
    if (coeff != 0) terms_.emplace_back(std::move(key), std::move(coeff));
  }

  /// Sorts, merges equal keys and drops zeros.
  static LinComb from_unsorted(std::vector<Term> raw) {
    Less less;
    std::sort(raw.begin(), raw.end(),
              [&](const Term& x, const Term& y) { return less(x.first, y.first); });
    LinComb out;
    out.terms_.reserve(raw.size());
    for (auto& t : raw) {
      if (!out.terms_.empty() && !less(out.terms_.back().first, t.first)) {
        out.terms_.back().second += t.second;
        if (out.terms_.back().second == 0) out.terms_.pop_back();
      } else if (t.second != 0) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Largest key with its coefficient. Precondition: !is_zero().
  const Term& leading() const { return terms_.back(); }

  Rational coefficient(const Key& key) const {
    auto it = find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    Less less;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [&](const Term& t, const Key& k) { return less(t.first, k); });
    if (it != terms_.end() && !less(key, it->first)) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term(key, coeff));
    }
  }

  /// this += scale * other, by a linear merge.
  void add_scaled(const LinComb& other, const Rational& scale) {
    if (scale == 0 || other.is_zero()) return;
    Less less;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || less(b->first, a->first)) {
        merged.emplace_back(b->first, b->second * scale);
        ++b;
      } else {
        Rational c = a->second + b->second * scale;
        if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  LinComb& operator+=(const LinComb& other) {
    add_scaled(other, Rational(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    add_scaled(other, Rational(-1));
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  friend LinComb operator*(const Rational& c, const LinComb& p) {
    LinComb out;
    if (c == 0) return out;
    out.terms_.reserve(p.terms_.size());
    for (const auto& [k, v] : p.terms_) out.terms_.emplace_back(k, v * c);
    return out;
  }

  LinComb operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    Less less;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& x = a.terms_[i];
      const auto& y = b.terms_[i];
      if (less(x.first, y.first) || less(y.first, x.first) || x.second != y.second) return false;
    }
    return true;
  }

 private:
  const_iterator find(const Key& key) const {
    Less less;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [&](const Term& t, const Key& k) { return less(t.first, k); });
    if (it != terms_.end() && !less(key, it->first)) return it;
    return terms_.end();
  }

  std::vector<Term> terms_;
};

}  // namespace gdnp
