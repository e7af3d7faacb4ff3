#include "operads/rational.hpp"

namespace operads {

std::string to_text(const Integer& n) { return n.str(); }

std::string to_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

Integer catalan(unsigned n) { return binomial(2 * n, n) / Integer(n + 1); }

Integer int_pow(const Integer& base, unsigned exp) {
  Integer out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace operads
