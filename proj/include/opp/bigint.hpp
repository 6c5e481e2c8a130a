#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace opp {

// Exact arbitrary-precision integer used for all ExactInteger coefficients
// and for Laurent-polynomial entries.  No floating point appears anywhere
// in this library.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace opp
