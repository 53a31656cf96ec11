#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scoregate {

// Exact arithmetic everywhere inside the audit; doubles appear only at
// I/O boundaries and in the statistics helpers.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using MatrixXr = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Integer pow10(int k) {
    Integer v = 1;
    for (int i = 0; i < k; ++i) v *= 10;
    return v;
}

/// Parses a plain decimal literal ("0.9473", "1", ".5") into an exact rational.
Rational parse_decimal(const std::string& text);

/// Exact fixed-point rendering with `digits` decimal places, ties away from zero.
std::string to_decimal_string(const Rational& value, int digits);

inline double to_double(const Rational& value) {
    return value.convert_to<double>();
}

inline Integer floor_div(const Integer& num, const Integer& den) {
    // den > 0 assumed
    Integer q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline Integer floor_rational(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Integer ceil_rational(const Rational& x) {
    return -floor_rational(-x);
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

}  // namespace scoregate
