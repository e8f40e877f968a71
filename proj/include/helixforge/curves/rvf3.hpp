#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "helixforge/field/ratfun.hpp"

namespace helixforge::curves {

using field::Polynomial;
using field::RatFun;
using field::SurdScalar;

/// Constant exact 3-vector.
using Vec3 = std::array<SurdScalar, 3>;
using RealVec = std::array<Real, 3>;

/// Rational vector field t -> (x(t), y(t), z(t)).
class RVF3 {
 public:
  RVF3() = default;
  RVF3(RatFun x, RatFun y, RatFun z) : c_{std::move(x), std::move(y), std::move(z)} {}
  explicit RVF3(const Vec3& v) : c_{RatFun(v[0]), RatFun(v[1]), RatFun(v[2])} {}

  const RatFun& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  RatFun& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  RVF3 derivative() const;
  bool is_zero() const;
  std::int64_t discriminant() const;

  /// Common denominator of the three components (monic).
  Polynomial common_denominator() const;
  /// Degree of the common-denominator form (N1, N2, N3)/D: max of all four degrees.
  int degree() const;
  std::array<int, 3> component_degrees() const;

  Vec3 operator()(const SurdScalar& t) const;
  RealVec evaluate(const Real& t) const;

  RVF3 operator-() const { return RVF3(-c_[0], -c_[1], -c_[2]); }
  RVF3& operator+=(const RVF3& o);
  RVF3& operator-=(const RVF3& o);
  RVF3& operator*=(const RatFun& s);

  friend RVF3 operator+(RVF3 a, const RVF3& b) { return a += b; }
  friend RVF3 operator-(RVF3 a, const RVF3& b) { return a -= b; }
  friend RVF3 operator*(RVF3 a, const RatFun& s) { return a *= s; }
  friend RVF3 operator*(const RatFun& s, RVF3 a) { return a *= s; }
  friend RVF3 operator/(RVF3 a, const RatFun& s) { return a *= s.inverse(); }
  friend bool operator==(const RVF3& a, const RVF3& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RVF3& a, const RVF3& b) { return !(a == b); }

 private:
  std::array<RatFun, 3> c_;
};

RatFun dot(const RVF3& a, const RVF3& b);
RVF3 cross(const RVF3& a, const RVF3& b);
/// det(a, b, c) = (a x b) . c
RatFun triple_det(const RVF3& a, const RVF3& b, const RVF3& c);

SurdScalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

Real dot(const RealVec& a, const RealVec& b);
RealVec cross(const RealVec& a, const RealVec& b);
Real norm(const RealVec& a);

std::ostream& operator<<(std::ostream& os, const RVF3& v);

}  // namespace helixforge::curves
