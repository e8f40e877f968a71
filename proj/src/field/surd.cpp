#include "helixforge/field/surd.hpp"

#include <limits>
#include <sstream>

#include "helixforge/errors.hpp"

namespace helixforge::field {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = boost::multiprecision::numerator(q);
  Integer d = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace

SurdScalar::SurdScalar(const Rational& a, const Rational& b, std::int64_t e) : a_(a), b_(b), e_(e) {
  if (e < 0) throw Error(ErrorKind::DiscriminantMismatch, "negative discriminant");
  canonicalize();
}

void SurdScalar::canonicalize() {
  if (e_ == 0) b_ = 0;
  if (e_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) e_ = 0;
}

SurdScalar SurdScalar::sqrt_of(const Rational& x) {
  if (x < 0) throw Error(ErrorKind::DiscriminantMismatch, "square root of a negative rational");
  if (x == 0) return SurdScalar();
  // sqrt(n/d) = sqrt(n d) / d = k sqrt(s) / d
  Integer nd = boost::multiprecision::numerator(x) * boost::multiprecision::denominator(x);
  Integer k, s;
  split_square(nd, k, s);
  if (s > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::DiscriminantMismatch, "discriminant exceeds 64 bits");
  Rational coeff(k, boost::multiprecision::denominator(x));
  if (s == 1) return SurdScalar(coeff);
  return SurdScalar(0, coeff, s.convert_to<std::int64_t>());
}

std::int64_t SurdScalar::common_discriminant(const SurdScalar& x, const SurdScalar& y) {
  if (x.b_ == 0) return y.e_;
  if (y.b_ == 0) return x.e_;
  if (x.e_ != y.e_)
    throw Error(ErrorKind::DiscriminantMismatch,
                "sqrt(" + std::to_string(x.e_) + ") vs sqrt(" + std::to_string(y.e_) + ")");
  return x.e_;
}

int SurdScalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with e b^2
  Rational lhs = a_ * a_;
  Rational rhs = Rational(e_) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

SurdScalar SurdScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Rational n = norm();
  return SurdScalar(a_ / n, -b_ / n, e_);
}

std::optional<SurdScalar> SurdScalar::sqrt(std::int64_t hint_e) const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return SurdScalar();
  if (b_ == 0) {
    if (auto r = rational_sqrt(a_)) return SurdScalar(*r);
    if (hint_e > 1) {
      // a = e y^2  =>  sqrt(a) = y sqrt(e)
      if (auto y = rational_sqrt(a_ / Rational(hint_e))) return SurdScalar(0, *y, hint_e);
    }
    return std::nullopt;
  }
  // (x + y sqrt e)^2 = a + b sqrt e  =>  x^2 + e y^2 = a, 2xy = b, x^2 - e y^2 = +-sqrt(N)
  auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    Rational x2 = (a_ + Rational(s) * *n) / 2;
    if (x2 <= 0) continue;
    if (auto x = rational_sqrt(x2)) {
      Rational y = b_ / (2 * *x);
      SurdScalar root(*x, y, e_);
      if (root.sign() < 0) root = -root;
      return root;
    }
  }
  return std::nullopt;
}

Real SurdScalar::to_real() const {
  Real v = helixforge::to_real(a_);
  if (b_ != 0) v += helixforge::to_real(b_) * boost::multiprecision::sqrt(Real(e_));
  return v;
}

double SurdScalar::to_double() const { return to_real().convert_to<double>(); }

std::string SurdScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

SurdScalar& SurdScalar::operator+=(const SurdScalar& o) {
  e_ = common_discriminant(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  canonicalize();
  return *this;
}

SurdScalar& SurdScalar::operator-=(const SurdScalar& o) {
  e_ = common_discriminant(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  canonicalize();
  return *this;
}

SurdScalar& SurdScalar::operator*=(const SurdScalar& o) {
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    canonicalize();
    return *this;
  }
  if (b_ == 0) {
    Rational a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    e_ = o.e_;
    canonicalize();
    return *this;
  }
  e_ = common_discriminant(*this, o);
  Rational a = a_ * o.a_ + Rational(e_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  canonicalize();
  return *this;
}

SurdScalar& SurdScalar::operator/=(const SurdScalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    canonicalize();
    return *this;
  }
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const SurdScalar& x) {
  if (x.surd_part() == 0) return os << to_string(x.rational_part());
  if (x.rational_part() != 0) os << to_string(x.rational_part()) << (x.surd_part() > 0 ? "+" : "");
  return os << to_string(x.surd_part()) << "*sqrt(" << x.discriminant() << ")";
}

}  // namespace helixforge::field
