#pragma once

#include <nlohmann/json.hpp>

#include "gdnp/admissible.hpp"
#include "gdnp/differential.hpp"
#include "gdnp/embedding.hpp"
#include "gdnp/term.hpp"

namespace gdnp::cli {

using nlohmann::json;

json to_json(const CWord& w, const Alphabet& gens);
json to_json(const CPoly& p, const Alphabet& gens);
json to_json(const DWord& w, const Alphabet& gens);
json to_json(const DPoly& p, const Alphabet& gens);
json to_json(const Tableau& tb, const Alphabet& gens);
json to_json(const TableauCombo& c, const Alphabet& gens);

}  // namespace gdnp::cli
