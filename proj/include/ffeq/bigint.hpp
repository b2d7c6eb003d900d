#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffeq/fq.hpp"

namespace ffeq {

// All counts and measures in the counting layer are exact: arbitrary
// precision integers and rationals, no floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// q^k for k >= 0.
BigInt q_pow(const Fq& F, int k);

// q^k as a rational, any sign of k.
BigRat q_pow_rat(const Fq& F, int k);

// "n" when the denominator is 1, else "n/d" (canonical reduced form).
std::string rat_to_string(const BigRat& x);

// Exact decimal rendering with `sig` significant digits, round half to even.
// Plain notation for moderate magnitudes, scientific otherwise; trailing
// zeros are kept so output width is deterministic.
std::string rat_to_decimal(const BigRat& x, int sig = 12);

}  // namespace ffeq
