#include "helixforge/field/scalar.hpp"

#include <cctype>
#include <string>

#include "helixforge/errors.hpp"

namespace helixforge {

namespace {
unsigned g_precision = 50;
}

void set_working_precision(unsigned digits10) {
  if (digits10 < 16) digits10 = 16;
  g_precision = digits10;
  Real::default_precision(digits10);
}

unsigned working_precision() { return g_precision; }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::Schema, "empty rational literal");

  auto parse_int = [&](const std::string& part) -> Integer {
    if (part.empty() || part == "+" || part == "-")
      throw Error(ErrorKind::Schema, "malformed rational literal '" + s + "'");
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(ErrorKind::Schema, "malformed rational literal '" + s + "'");
    // strip leading zeros so the string is never read as octal
    bool neg = part[0] == '-';
    std::size_t first = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    while (first + 1 < part.size() && part[first] == '0') ++first;
    Integer v(part.substr(first));
    return neg ? Integer(-v) : v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer p = parse_int(s.substr(0, slash));
    Integer q = parse_int(s.substr(slash + 1));
    if (q == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + s + "'");
    return Rational(p, q);
  }

  // Decimal with optional exponent, converted exactly.
  std::string mant = s;
  long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    mant = s.substr(0, epos);
    exp10 = parse_int(s.substr(epos + 1)).convert_to<long>();
  }
  std::string digits = mant;
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    if (digits == "" || digits == "-" || digits == "+") digits += "0";
  }
  Rational value(parse_int(digits));
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? value / Rational(scale) : value * Rational(scale);
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

void split_square(const Integer& n, Integer& k, Integer& s) {
  k = 1;
  s = 1;
  Integer rest = n;
  for (unsigned long p = 2; p < (1ul << 20); p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (rest % pp == 0) {
      rest /= pp;
      k *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      s *= p;
    }
  }
  Integer r = boost::multiprecision::sqrt(rest);
  if (r * r == rest) {
    k *= r;
  } else {
    s *= rest;
  }
}

}  // namespace helixforge
