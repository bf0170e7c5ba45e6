#include "gdnp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gdnp/errors.hpp"

namespace gdnp {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> all_identifiers(std::string_view src) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < src.size();) {
    if (ident_start(src[i]) && (i == 0 || !ident_char(src[i - 1]))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.emplace_back(src.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Alphabet& gens) : src_(src), gens_(gens) {}

  Term expr() {
    Term t = circ();
    while (eat('*')) t = Term::dot(t, circ());
    return t;
  }

  TermCombo term_combo() {
    std::vector<TermCombo::Term> raw;
    combo([&](const Rational& c) { raw.emplace_back(expr(), c); });
    return TermCombo::from_unsorted(std::move(raw));
  }

  CPoly cpoly() {
    std::vector<CPoly::Term> raw;
    combo([&](const Rational& c) { raw.emplace_back(word(), c); });
    return CPoly::from_unsorted(std::move(raw));
  }

  void finish() {
    skip_ws();
    if (pos_ < src_.size()) fail("an operator or end of input");
  }

 private:
  template <class Part>
  void combo(Part&& part) {
    skip_ws();
    bool negative = false;
    if (eat('-')) {
      negative = true;
    } else {
      eat('+');
    }
    for (;;) {
      skip_ws();
      Rational c = is_digit(peek()) ? rational() : Rational(1);
      part(negative ? Rational(-c) : c);
      if (eat('+')) {
        negative = false;
      } else if (eat('-')) {
        negative = true;
      } else {
        break;
      }
    }
  }

  Term circ() {
    Term t = atom();
    if (eat('@')) t = Term::circ(t, atom());
    return t;
  }

  Term atom() {
    skip_ws();
    if (eat('(')) {
      Term t = expr();
      if (!eat(')')) fail("')'");
      return t;
    }
    return Term::leaf(letter("an identifier, 'e' or '('"));
  }

  CWord word() {
    std::vector<Factor> factors{factor()};
    std::size_t star_count = 1;
    while (eat('&')) {
      factors.push_back(factor());
      ++star_count;
    }
    while (eat('*')) factors.push_back(factor());
    skip_ws();
    if (peek() == '&') fail("a factor after '*' (the star block must come first)");
    return CWord::canonical(std::move(factors), star_count);
  }

  Factor factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == 'D' && (pos_ + 1 >= src_.size() || !ident_char(src_[pos_ + 1]))) {
      ++pos_;
      std::uint32_t degree = 1;
      if (eat('^')) {
        skip_ws();
        if (!is_digit(peek())) fail("a degree after '^'");
        degree = static_cast<std::uint32_t>(std::stoul(std::string(digits())));
      }
      if (!eat('(')) fail("'(' after D");
      const Letter a = letter("a letter");
      if (!eat(')')) fail("')'");
      return Factor{degree, a};
    }
    pos_ = start;
    return Factor{0, letter("a factor")};
  }

  Letter letter(const char* expected) {
    skip_ws();
    if (!ident_start(peek())) fail(expected);
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (auto a = gens_.find(name)) return *a;
    throw ParseError("unknown generator '" + std::string(name) + "' at position " +
                         std::to_string(start + 1),
                     start + 1);
  }

  Rational rational() {
    using boost::multiprecision::cpp_int;
    const cpp_int num{std::string(digits())};
    if (!eat('/')) return Rational(num);
    skip_ws();
    const std::size_t at = pos_;
    if (!is_digit(peek())) fail("a denominator");
    const cpp_int den{std::string(digits())};
    if (den == 0) throw ParseError("zero denominator at position " + std::to_string(at + 1), at + 1);
    return Rational(num, den);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found =
        pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw ParseError("expected " + expected + " at position " + std::to_string(pos_ + 1) +
                         ", found " + found,
                     pos_ + 1);
  }

  std::string_view src_;
  const Alphabet& gens_;
  std::size_t pos_ = 0;
};

template <class Combo, class KeyPrinter>
std::string print_combo(const Combo& c, KeyPrinter&& key) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const Rational& q = it->second;
    const bool negative = q < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-q) : q;
    if (magnitude != 1) out += print_rational(magnitude) + " ";
    out += key(it->first);
    first = false;
  }
  return out;
}

std::string print_factor(const Factor& f, const Alphabet& gens) {
  const std::string name = gens.name(f.letter);
  if (f.degree == 0) return name;
  if (f.degree == 1) return "D(" + name + ")";
  return "D^" + std::to_string(f.degree) + "(" + name + ")";
}

}  // namespace

Term parse_term(std::string_view src, const Alphabet& gens) {
  Parser p(src, gens);
  Term t = p.expr();
  p.finish();
  return t;
}

TermCombo parse_term_combo(std::string_view src, const Alphabet& gens) {
  Parser p(src, gens);
  TermCombo c = p.term_combo();
  p.finish();
  return c;
}

CPoly parse_cpoly(std::string_view src, const Alphabet& gens) {
  Parser p(src, gens);
  CPoly c = p.cpoly();
  p.finish();
  return c;
}

bool looks_like_cpoly(std::string_view src) {
  if (src.find('&') != std::string_view::npos) return true;
  const auto names = all_identifiers(src);
  return std::find(names.begin(), names.end(), "D") != names.end();
}

CPoly parse_element(std::string_view src, const Alphabet& gens) {
  if (looks_like_cpoly(src)) return parse_cpoly(src, gens);
  CPoly out;
  for (const auto& [t, c] : parse_term_combo(src, gens)) out.add_scaled(phi(t), c);
  return out;
}

std::vector<std::string> identifiers(std::string_view src) {
  std::set<std::string> names;
  for (auto& name : all_identifiers(src)) {
    if (name != "e" && name != "D") names.insert(std::move(name));
  }
  return {names.begin(), names.end()};
}

std::string print_rational(const Rational& q) { return q.str(); }

std::string print_term(const Term& t, const Alphabet& gens) {
  switch (t.op()) {
    case Op::Leaf:
      return gens.name(t.letter());
    case Op::Dot: {
      const Term r = t.right();
      const std::string rs = print_term(r, gens);
      return print_term(t.left(), gens) + " * " + (r.op() == Op::Dot ? "(" + rs + ")" : rs);
    }
    case Op::Circ: {
      auto wrap = [&](const Term& s) {
        return s.is_leaf() ? print_term(s, gens) : "(" + print_term(s, gens) + ")";
      };
      return wrap(t.left()) + "@" + wrap(t.right());
    }
  }
  return {};
}

std::string print_word(const CWord& w, const Alphabet& gens) {
  std::string out;
  const auto& f = w.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += i < w.star_count() ? " & " : " * ";
    out += print_factor(f[i], gens);
  }
  return out;
}

std::string print_dword(const DWord& w, const Alphabet& gens) {
  if (w.is_unit()) return "1";
  std::string out;
  for (const auto& f : w.factors()) {
    if (!out.empty()) out += " * ";
    out += print_factor(f, gens);
  }
  return out;
}

std::string print_cpoly(const CPoly& p, const Alphabet& gens) {
  return print_combo(p, [&](const CWord& w) { return print_word(w, gens); });
}

std::string print_dpoly(const DPoly& p, const Alphabet& gens) {
  return print_combo(p, [&](const DWord& w) { return print_dword(w, gens); });
}

std::string print_tableaux(const TableauCombo& c, const Alphabet& gens) {
  return print_combo(c, [&](const Tableau& tb) { return print_term(tableau_term(tb), gens); });
}

std::string print_terms(const TermCombo& c, const Alphabet& gens) {
  return print_combo(c, [&](const Term& t) { return print_term(t, gens); });
}

}  // namespace gdnp
