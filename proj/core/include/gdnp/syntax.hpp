#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gdnp/admissible.hpp"
#include "gdnp/differential.hpp"
#include "gdnp/embedding.hpp"
#include "gdnp/rewriter.hpp"
#include "gdnp/term.hpp"

namespace gdnp {

// Grammar:
//   expr  := circ ('*' circ)*          left-associated ·
//   circ  := atom ('@' atom)?          a@b@c needs parentheses
//   atom  := identifier | 'e' | '(' expr ')'
//   combo := [sign] part ((+|-) part)*
//   part  := [rational] expr           e.g. "2 a@b - 1/2 b@a"
// Word syntax for kC[X]:
//   word   := factor ('&' factor)* ('*' factor)*
//   factor := letter | 'D' ['^' n] '(' letter ')'
// Errors throw ParseError with a 1-based character position.

Term parse_term(std::string_view src, const Alphabet& gens);
TermCombo parse_term_combo(std::string_view src, const Alphabet& gens);
CPoly parse_cpoly(std::string_view src, const Alphabet& gens);

/// True when the text uses word syntax (`&` or a D-factor) rather than terms.
bool looks_like_cpoly(std::string_view src);

/// Parses either syntax; terms are sent to kC[X] through phi.
CPoly parse_element(std::string_view src, const Alphabet& gens);

/// Distinct identifiers in the text other than `e` and `D`, sorted.
std::vector<std::string> identifiers(std::string_view src);

std::string print_rational(const Rational& q);
std::string print_term(const Term& t, const Alphabet& gens);
std::string print_word(const CWord& w, const Alphabet& gens);
std::string print_dword(const DWord& w, const Alphabet& gens);

// Combinations are printed largest key first; a coefficient of 1 is omitted.
std::string print_cpoly(const CPoly& p, const Alphabet& gens);
std::string print_dpoly(const DPoly& p, const Alphabet& gens);
std::string print_tableaux(const TableauCombo& c, const Alphabet& gens);
std::string print_terms(const TermCombo& c, const Alphabet& gens);

}  // namespace gdnp
