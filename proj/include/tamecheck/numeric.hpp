#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace tamecheck {

// All combinatorial bounds are computed in exact integer arithmetic;
// floats appear only in the sample planners (ln and the final division).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Smallest k with 2^k >= x.  Requires x >= 1.
int ceil_log2(const BigInt& x);

// x^e for nonnegative integer exponents.
BigInt ipow(const BigInt& x, unsigned long e);

}  // namespace tamecheck
