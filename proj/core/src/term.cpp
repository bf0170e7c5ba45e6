#include "gdnp/term.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "gdnp/errors.hpp"

namespace gdnp {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ParseError("invalid generator name '" + n + "'", 0);
    if (n == "e" || n == "D") throw ParseError("generator name '" + n + "' is reserved", 0);
    if (!seen.insert(n).second) throw ParseError("duplicate generator '" + n + "'", 0);
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  if (name == "e") return Letter::unit();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Letter(static_cast<std::uint32_t>(i + 1));
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw ParseError("unknown generator '" + std::string(name) + "'", 0);
}

std::string Alphabet::name(Letter a) const {
  if (a.is_unit()) return "e";
  if (a.rank() > names_.size()) return "x" + std::to_string(a.rank());
  return names_[a.rank() - 1];
}

std::vector<Letter> Alphabet::generators() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.emplace_back(static_cast<std::uint32_t>(i + 1));
  return out;
}

Term Term::leaf(Letter a) {
  auto n = std::make_shared<Node>();
  n->op = Op::Leaf;
  n->letter = a;
  if (a.is_unit()) {
    n->counts.ecount = 1;
  } else {
    n->counts.xcount = 1;
  }
  n->hash = mix(0x51ed27, a.rank());
  return Term(std::move(n));
}

Term Term::circ(Term left, Term right) { return make(Op::Circ, left, right); }
Term Term::dot(Term left, Term right) { return make(Op::Dot, left, right); }

Term Term::make(Op op, const Term& left, const Term& right) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = left.node_;
  n->right = right.node_;
  const Counts& l = left.counts();
  const Counts& r = right.counts();
  n->counts = Counts{l.circ + r.circ + (op == Op::Circ ? 1 : 0), l.xcount + r.xcount,
                     l.ecount + r.ecount};
  if (op == Op::Dot) {
    n->root = left.root() + right.root();
  } else {
    n->root = left.root() + (r.circ == 0 ? 1 : right.root());
  }
  n->hash = mix(mix(static_cast<std::size_t>(op) * 0x2545f491, left.hash()), right.hash());
  return Term(std::move(n));
}

bool Term::equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->op != b->op) return false;
  if (a->op == Op::Leaf) return a->letter == b->letter;
  return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
}

std::strong_ordering Term::compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  auto la = a->counts.xcount + a->counts.ecount;
  auto lb = b->counts.xcount + b->counts.ecount;
  if (auto c = la <=> lb; c != 0) return c;
  if (auto c = a->op <=> b->op; c != 0) return c;
  if (a->op == Op::Leaf) return a->letter <=> b->letter;
  if (auto c = compare(a->left.get(), b->left.get()); c != 0) return c;
  return compare(a->right.get(), b->right.get());
}

bool operator==(const Term& a, const Term& b) { return Term::equal(a.node_.get(), b.node_.get()); }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return Term::compare(a.node_.get(), b.node_.get());
}

namespace {
void collect_x(const Term& t, std::vector<Letter>& out) {
  if (t.is_leaf()) {
    if (!t.letter().is_unit()) out.push_back(t.letter());
    return;
  }
  collect_x(t.left(), out);
  collect_x(t.right(), out);
}
}  // namespace

std::vector<Letter> x_letters(const Term& t) {
  std::vector<Letter> out;
  collect_x(t, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Term left_normed(Op op, std::span<const Term> parts) {
  Term acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = op == Op::Circ ? Term::circ(acc, parts[i]) : Term::dot(acc, parts[i]);
  }
  return acc;
}

Term right_normed(Op op, std::span<const Term> parts) {
  Term acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = op == Op::Circ ? Term::circ(parts[i], acc) : Term::dot(parts[i], acc);
  }
  return acc;
}

Monomial::Monomial(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::erase_if(letters_, [](Letter a) { return a.is_unit(); });
  std::sort(letters_.begin(), letters_.end(), std::greater<>());
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.letters_.resize(letters_.size() + other.letters_.size());
  std::merge(letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end(),
             out.letters_.begin(), std::greater<>());
  return out;
}

bool Monomial::contains(const Monomial& part) const {
  return std::includes(letters_.begin(), letters_.end(), part.letters_.begin(),
                       part.letters_.end(), std::greater<>());
}

Monomial Monomial::operator/(const Monomial& part) const {
  Monomial out;
  std::set_difference(letters_.begin(), letters_.end(), part.letters_.begin(), part.letters_.end(),
                      std::back_inserter(out.letters_), std::greater<>());
  return out;
}

Term Monomial::to_term() const {
  if (letters_.empty()) return Term::unit();
  std::vector<Term> parts;
  parts.reserve(letters_.size());
  for (Letter a : letters_) parts.push_back(Term::leaf(a));
  return left_normed(Op::Dot, parts);
}

std::strong_ordering deglex_compare(const Monomial& u, const Monomial& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.letters().begin(), u.letters().end(),
                                                v.letters().begin(), v.letters().end());
}

}  // namespace gdnp
