#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace smolyak {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den", also for integers ("3/1").
std::string to_string(const Rational& q);

// Accepts "n", "n/d", with optional sign and surrounding whitespace.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);
double to_double(const BigInt& n);

BigInt binomial(long n, long k);

Rational pow2(int exponent);

}  // namespace smolyak
