#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace degpat {

// All character degrees and group orders are exact unbounded integers;
// intermediate surd arithmetic uses exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

} // namespace degpat
