#pragma once

#include <algorithm>
#include <ostream>

#include "helixforge/field/polynomial.hpp"

namespace helixforge::field {

/// num/den over Q(sqrt(e)), always stored reduced with a monic denominator.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const SurdScalar& c) : num_(c), den_(1) {}   // NOLINT
  RatFun(long c) : RatFun(SurdScalar(c)) {}           // NOLINT
  RatFun(const Polynomial& p) : num_(p), den_(1) {}   // NOLINT
  /// Throws DivisionByZero when den is the zero polynomial.
  RatFun(const Polynomial& num, const Polynomial& den);

  static RatFun t() { return RatFun(Polynomial::t()); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// max(deg num, deg den).
  int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }
  std::int64_t discriminant() const;
  /// Constant value; InvariantViolation when not constant.
  SurdScalar constant_value() const;

  RatFun derivative() const;
  RatFun inverse() const;

  /// Exact value; PoleAtParameter when den(x) = 0.
  SurdScalar operator()(const SurdScalar& x) const;
  /// Working-precision value; PoleAtParameter when den(x) vanishes relative to its size.
  Real evaluate(const Real& x) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
  friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
  friend RatFun operator*(RatFun x, const RatFun& y) { return x *= y; }
  friend RatFun operator/(RatFun x, const RatFun& y) { return x /= y; }
  friend bool operator==(const RatFun& x, const RatFun& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }

 private:
  struct Reduced {};
  RatFun(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RatFun pow(const RatFun& x, unsigned n);
std::ostream& operator<<(std::ostream& os, const RatFun& x);

}  // namespace helixforge::field
