#include "json_out.hpp"

#include "gdnp/syntax.hpp"

namespace gdnp::cli {

namespace {

json factor_json(const Factor& f, const Alphabet& gens) { return json::array({f.degree, gens.name(f.letter)}); }

json letters_json(const std::vector<Letter>& letters, const Alphabet& gens) {
  json out = json::array();
  for (Letter a : letters) out.push_back(gens.name(a));
  return out;
}

}  // namespace

json to_json(const CWord& w, const Alphabet& gens) {
  json star = json::array();
  json dot = json::array();
  const auto& f = w.factors();
  for (std::size_t i = 0; i < f.size(); ++i) (i < w.star_count() ? star : dot).push_back(factor_json(f[i], gens));
  return {{"star", std::move(star)}, {"dot", std::move(dot)}};
}

json to_json(const CPoly& p, const Alphabet& gens) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({{"coeff", print_rational(it->second)}, {"word", to_json(it->first, gens)}});
  }
  return out;
}

json to_json(const DWord& w, const Alphabet& gens) {
  json out = json::array();
  for (const auto& f : w.factors()) out.push_back(factor_json(f, gens));
  return out;
}

json to_json(const DPoly& p, const Alphabet& gens) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({{"coeff", print_rational(it->second)}, {"word", to_json(it->first, gens)}});
  }
  return out;
}

json to_json(const Tableau& tb, const Alphabet& gens) {
  json rows = json::array();
  for (const auto& row : tb.rows) {
    rows.push_back({{"body", letters_json(row.body, gens)}, {"tail", gens.name(row.tail)}});
  }
  return {{"dots", letters_json(tb.dots.letters(), gens)}, {"head", gens.name(tb.head)}, {"rows", std::move(rows)}};
}

json to_json(const TableauCombo& c, const Alphabet& gens) {
  json out = json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    out.push_back({{"coeff", print_rational(it->second)},
                   {"tableau", to_json(it->first, gens)},
                   {"term", print_term(tableau_term(it->first), gens)}});
  }
  return out;
}

}  // namespace gdnp::cli
