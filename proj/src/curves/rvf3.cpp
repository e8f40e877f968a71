#include "helixforge/curves/rvf3.hpp"

#include <algorithm>

namespace helixforge::curves {

RVF3 RVF3::derivative() const { return RVF3(c_[0].derivative(), c_[1].derivative(), c_[2].derivative()); }

bool RVF3::is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

std::int64_t RVF3::discriminant() const {
  for (const auto& c : c_)
    if (auto e = c.discriminant(); e != 0) return e;
  return 0;
}

Polynomial RVF3::common_denominator() const {
  Polynomial d = c_[0].den();
  for (int i = 1; i < 3; ++i) {
    const Polynomial& di = c_[static_cast<std::size_t>(i)].den();
    if (di.degree() == 0) continue;
    d = field::exact_div(d * di, field::gcd(d, di));
  }
  return d.monic();
}

int RVF3::degree() const {
  Polynomial d = common_denominator();
  int deg = d.degree();
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    // numerator in the common form: num * (d / den)
    deg = std::max(deg, c.num().degree() + d.degree() - c.den().degree());
  }
  return deg;
}

std::array<int, 3> RVF3::component_degrees() const {
  return {c_[0].degree(), c_[1].degree(), c_[2].degree()};
}

Vec3 RVF3::operator()(const SurdScalar& t) const { return {c_[0](t), c_[1](t), c_[2](t)}; }

RealVec RVF3::evaluate(const Real& t) const { return {c_[0].evaluate(t), c_[1].evaluate(t), c_[2].evaluate(t)}; }

RVF3& RVF3::operator+=(const RVF3& o) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

RVF3& RVF3::operator-=(const RVF3& o) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

RVF3& RVF3::operator*=(const RatFun& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RatFun dot(const RVF3& a, const RVF3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

RVF3 cross(const RVF3& a, const RVF3& b) {
  return RVF3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

RatFun triple_det(const RVF3& a, const RVF3& b, const RVF3& c) { return dot(cross(a, b), c); }

SurdScalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Real dot(const RealVec& a, const RealVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

RealVec cross(const RealVec& a, const RealVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Real norm(const RealVec& a) { return sqrt(dot(a, a)); }

std::ostream& operator<<(std::ostream& os, const RVF3& v) {
  return os << "[" << v[0] << ", " << v[1] << ", " << v[2] << "]";
}

}  // namespace helixforge::curves
