#include "helixforge/field/ratfun.hpp"

#include "helixforge/errors.hpp"

namespace helixforge::field {

RatFun::RatFun(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  SurdScalar lc = den_.leading();
  if (!lc.is_one()) {
    SurdScalar inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

std::int64_t RatFun::discriminant() const {
  std::int64_t e = num_.discriminant();
  return e != 0 ? e : den_.discriminant();
}

SurdScalar RatFun::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvariantViolation, "rational function is not constant");
  return num_.coefficient(0);
}

RatFun RatFun::derivative() const {
  if (num_.degree() <= 0 && den_.degree() == 0) return RatFun();
  if (den_.degree() == 0) return RatFun(num_.derivative(), Polynomial(1), Reduced{});
  // (n/d)' = (n'd - nd')/d^2; the gcd with d^2 can only involve repeated factors of d
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  RatFun r(den_, num_, Reduced{});
  SurdScalar inv = r.den_.leading().inverse();
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

SurdScalar RatFun::operator()(const SurdScalar& x) const {
  SurdScalar d = den_(x);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtParameter, "pole at t = " + x.to_string());
  return num_(x) / d;
}

Real RatFun::evaluate(const Real& x) const {
  Real d = 0;
  Real scale = 0;
  Real ax = abs(x);
  for (auto it = den_.coefficients().rbegin(); it != den_.coefficients().rend(); ++it) {
    Real c = it->to_real();
    d = d * x + c;
    scale = scale * ax + abs(c);
  }
  if (abs(d) <= Real("1e-14") * scale)
    throw Error(ErrorKind::PoleAtParameter, "pole at t = " + x.str(20));
  return num_.evaluate(x) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  // cross-cancel before multiplying to keep the gcd work small
  Polynomial g1 = den_.degree() > 0 && o.num_.degree() > 0 ? gcd(o.num_, den_) : Polynomial(1);
  Polynomial g2 = o.den_.degree() > 0 && num_.degree() > 0 ? gcd(num_, o.den_) : Polynomial(1);
  Polynomial n = exact_div(num_, g2) * exact_div(o.num_, g1);
  Polynomial d = exact_div(den_, g1) * exact_div(o.den_, g2);
  num_ = std::move(n);
  den_ = std::move(d);
  SurdScalar lc = den_.leading();
  if (!lc.is_one()) {
    SurdScalar inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun pow(const RatFun& x, unsigned n) {
  return RatFun(pow(x.num(), n), pow(x.den(), n));
}

std::ostream& operator<<(std::ostream& os, const RatFun& x) {
  if (x.den().degree() == 0) return os << x.num();
  return os << "(" << x.num() << ") / (" << x.den() << ")";
}

}  // namespace helixforge::field
