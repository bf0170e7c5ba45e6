#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdnp {

/// Exact rational coefficients. Small values stay in the inline limb buffer.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace gdnp
