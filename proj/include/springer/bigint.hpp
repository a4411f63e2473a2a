// bigint.hpp
//
// Arbitrary-precision integer and rational types used by every counting and
// linear-algebra path in the engine.  Counts like s^(n-1) or multinomial
// coefficients overflow fixed-width integers almost immediately, so nothing
// in a counting path ever touches a machine word; Laurent coefficients are
// exact rationals (the coefficient field stands in for an algebraically
// closed field of characteristic zero — every identity we verify is a
// polynomial identity with rational data).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace springer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace springer
