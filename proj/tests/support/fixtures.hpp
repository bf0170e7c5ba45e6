#pragma once

#include <string>
#include <vector>

#include "gdnp/syntax.hpp"

namespace fixtures {

inline const gdnp::Alphabet& abc() {
  static const gdnp::Alphabet alphabet({"a", "b", "c"});
  return alphabet;
}

inline gdnp::Term T(const std::string& src) { return gdnp::parse_term(src, abc()); }
inline gdnp::CPoly P(const std::string& src) { return gdnp::parse_cpoly(src, abc()); }
inline gdnp::CWord W(const std::string& src) { return P(src).leading().first; }
inline std::string show(const gdnp::CPoly& p) { return gdnp::print_cpoly(p, abc()); }
inline std::string show(const gdnp::TableauCombo& c) { return gdnp::print_tableaux(c, abc()); }
inline std::string show(const gdnp::Term& t) { return gdnp::print_term(t, abc()); }

inline constexpr gdnp::Letter e = gdnp::Letter::unit();
inline constexpr gdnp::Letter a{1};
inline constexpr gdnp::Letter b{2};
inline constexpr gdnp::Letter c{3};

inline gdnp::Monomial M(std::vector<gdnp::Letter> letters) { return gdnp::Monomial(std::move(letters)); }

}  // namespace fixtures
