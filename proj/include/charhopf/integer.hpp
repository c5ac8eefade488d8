#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace charhopf {

// Coefficients of every exposed symmetric function.
using Integer = boost::multiprecision::cpp_int;

// Only used internally by the power-sum machinery.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace charhopf
