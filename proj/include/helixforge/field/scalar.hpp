#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace helixforge {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

/// Decimal digits used for every new Real. Process-wide; set it before spawning threads.
void set_working_precision(unsigned digits10);
unsigned working_precision();

/// Parses "p/q", "-7", or a finite decimal such as "0.125" or "1e-3" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

/// Squarefree decomposition n = k^2 * s for n > 0. Trial division up to 2^20 and a
/// perfect-square test on the cofactor; s is squarefree for all inputs below 2^40.
void split_square(const Integer& n, Integer& k, Integer& s);

}  // namespace helixforge
