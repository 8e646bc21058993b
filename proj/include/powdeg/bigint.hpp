#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace powdeg {

/// Exact integer used for every group order, count and degree.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

inline std::string to_string(BigInt const& value) { return value.str(); }

}  // namespace powdeg
