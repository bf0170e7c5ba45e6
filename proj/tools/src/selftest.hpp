#pragma once

#include <cstddef>
#include <cstdint>

#include "json_out.hpp"

namespace gdnp::cli {

/// Seeded property checks over the whole library. Each trial draws from its
/// own generator seeded by (seed, check, trial), so the report depends only on
/// the arguments. The report never contains timings.
json selftest_report(const Alphabet& gens, std::uint64_t seed, std::size_t trials);

}  // namespace gdnp::cli
