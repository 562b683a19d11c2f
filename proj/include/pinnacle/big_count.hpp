#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pinnacle {

/// Exact integer for cardinalities; signed so alternating sums stay exact.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count &value) { return value.str(); }

} // namespace pinnacle
