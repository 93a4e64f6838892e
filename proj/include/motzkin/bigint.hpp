#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

// Arbitrary-precision integer; used both for naturals (counts, indices) and
// for signed polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using BigNat = BigInt;

// Exact rational with canonical (reduced, positive-denominator) form.
using BigRat = boost::multiprecision::cpp_rational;

inline bool is_integral(const BigRat& q) { return denominator(q) == 1; }

}  // namespace motzkin
