#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kdvflow {

// Exact rational scalar used for all symbolic coefficient arithmetic.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace kdvflow
