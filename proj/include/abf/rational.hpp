#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace abf {

// Arbitrary-precision rational. Character products and projector sums in the
// order-1536 group overflow 64-bit numerators, so fixed-width types are out.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace abf
