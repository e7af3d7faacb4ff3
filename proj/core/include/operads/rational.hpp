#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace operads {

// Exact scalars. Rational is always stored reduced with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_text(const Integer& n);
std::string to_text(const Rational& r);  // "p" or "p/q"

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer catalan(unsigned n);
Integer int_pow(const Integer& base, unsigned exp);

}  // namespace operads
