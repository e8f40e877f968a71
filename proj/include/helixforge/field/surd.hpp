#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "helixforge/field/scalar.hpp"

namespace helixforge::field {

/// Exact element a + b*sqrt(e) of Q(sqrt(e)), e squarefree.
///
/// Canonical form: b == 0 implies e == 0, so a rational value compares equal no
/// matter which field it came from. Two values with b != 0 combine only when their
/// discriminants agree; rational values combine with anything.
class SurdScalar {
 public:
  SurdScalar() = default;
  SurdScalar(const Rational& a) : a_(a) {}  // NOLINT: implicit by design of the field tower
  SurdScalar(long a) : a_(a) {}             // NOLINT
  SurdScalar(int a) : a_(a) {}              // NOLINT
  SurdScalar(const Rational& a, const Rational& b, std::int64_t e);

  /// sqrt(x) for x >= 0, written as k*sqrt(s) with s squarefree.
  static SurdScalar sqrt_of(const Rational& x);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  std::int64_t discriminant() const noexcept { return e_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  int sign() const;

  SurdScalar conjugate() const { return SurdScalar(a_, -b_, e_); }
  /// a^2 - e b^2; nonzero for nonzero values since e is not a square.
  Rational norm() const { return a_ * a_ - Rational(e_) * b_ * b_; }
  SurdScalar inverse() const;

  /// Square root inside the same field, when one exists (sign: nonnegative).
  /// A rational value may also take its root in Q(sqrt(hint_e)).
  std::optional<SurdScalar> sqrt(std::int64_t hint_e = 0) const;

  Real to_real() const;
  double to_double() const;
  std::string to_string() const;

  SurdScalar operator-() const { return SurdScalar(-a_, -b_, e_); }
  SurdScalar& operator+=(const SurdScalar& o);
  SurdScalar& operator-=(const SurdScalar& o);
  SurdScalar& operator*=(const SurdScalar& o);
  SurdScalar& operator/=(const SurdScalar& o);

  friend SurdScalar operator+(SurdScalar x, const SurdScalar& y) { return x += y; }
  friend SurdScalar operator-(SurdScalar x, const SurdScalar& y) { return x -= y; }
  friend SurdScalar operator*(SurdScalar x, const SurdScalar& y) { return x *= y; }
  friend SurdScalar operator/(SurdScalar x, const SurdScalar& y) { return x /= y; }
  friend bool operator==(const SurdScalar& x, const SurdScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.e_ == y.e_;
  }
  friend bool operator!=(const SurdScalar& x, const SurdScalar& y) { return !(x == y); }
  friend bool operator<(const SurdScalar& x, const SurdScalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const SurdScalar& x, const SurdScalar& y) { return (x - y).sign() > 0; }

 private:
  void canonicalize();
  static std::int64_t common_discriminant(const SurdScalar& x, const SurdScalar& y);

  Rational a_{0};
  Rational b_{0};
  std::int64_t e_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SurdScalar& x);

}  // namespace helixforge::field
