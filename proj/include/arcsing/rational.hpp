#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace arcsing {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" for integers and "p/q" otherwise; never decimal.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

}  // namespace arcsing
