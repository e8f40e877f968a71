#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "helixforge/field/surd.hpp"

namespace helixforge::field {

/// Univariate polynomial over Q(sqrt(e)), coefficients in ascending degree.
/// The coefficient vector never carries a zero leading term; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const SurdScalar& c);  // NOLINT: constants embed as degree-0 polynomials
  Polynomial(long c) : Polynomial(SurdScalar(c)) {}  // NOLINT
  Polynomial(std::vector<SurdScalar> coeffs);        // NOLINT
  Polynomial(std::initializer_list<SurdScalar> coeffs) : Polynomial(std::vector<SurdScalar>(coeffs)) {}

  /// The monomial t.
  static Polynomial t() { return Polynomial({SurdScalar(0), SurdScalar(1)}); }
  static Polynomial monomial(int degree, const SurdScalar& c = SurdScalar(1));

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<SurdScalar>& coefficients() const noexcept { return c_; }
  SurdScalar coefficient(int i) const;
  SurdScalar leading() const;
  /// Shared discriminant of the coefficients (0 if all rational).
  std::int64_t discriminant() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  SurdScalar operator()(const SurdScalar& x) const;
  Real evaluate(const Real& x) const;

  /// Exact square root when this is a perfect square in Q(sqrt(e))[t]; leading
  /// coefficient of the root taken positive.
  std::optional<Polynomial> sqrt(std::int64_t hint_e = 0) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const SurdScalar& s);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(Polynomial x, const SurdScalar& s) { return x *= s; }
  friend Polynomial operator*(const SurdScalar& s, Polynomial x) { return x *= s; }
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

 private:
  void trim();
  std::vector<SurdScalar> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient, asserting a zero remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
/// Monic gcd by the Euclidean algorithm; gcd(p, 0) = monic(p). Throws BothZero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned n);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace helixforge::field
