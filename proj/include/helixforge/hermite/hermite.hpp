#pragma once

#include <optional>

#include "helixforge/curves/construct.hpp"
#include "helixforge/helix/helix.hpp"

namespace helixforge::hermite {

using curves::Bezier3;
using curves::RVF3;
using curves::Vec3;
using field::RatFun;
using field::SurdScalar;

using QVec = std::array<Rational, 3>;
/// Rational rotation matrix, row-major.
using QMat = std::array<QVec, 3>;

QMat identity();
QMat transpose(const QMat& m);
QVec mat_vec(const QMat& m, const QVec& v);
Vec3 mat_vec(const QMat& m, const Vec3& v);
/// Rotation from the rational quaternion (w, x, y, z), normalized by its squared norm.
QMat rotation_from_quaternion(const Rational& w, const Rational& x, const Rational& y, const Rational& z);

struct HermiteData {
  /// Endpoints; coordinates may carry one common square root.
  Vec3 p0, p1;
  /// Tangent directions; need not be unit.
  QVec t0, t1;
};

struct HermiteOptions {
  /// 0 projects the tangent arc onto a straight line through the two projected
  /// points; a nonzero value bends it into a circle through them.
  Rational circle_bulge = 0;
  /// Rotation applied to the data before projecting from (0, 0, 1). When absent a
  /// permutation rotation is chosen only if a tangent lies within 1e-6 of the pole.
  std::optional<QMat> frame_rotation;
};

/// Exact unit vector along v. When |v| is irrational the direction is rounded to a
/// nearby rational point of the sphere (error below 1e-40) and exact is set false.
struct UnitTangent {
  QVec t;
  bool exact = true;
};
UnitTangent normalize_tangent(const QVec& v);

/// Linear (or Mobius-circle) b1, b2 with stereographic image t0 at 0 and t1 at 1.
/// Throws PoleTangent when either tangent is the projection pole.
std::pair<RatFun, RatFun> project_tangents(const QVec& t0, const QVec& t1, const Rational& circle_bulge = 0);

/// a3 and its first two derivatives at t = 0 and t = 1, ordered (A0, A1, A2, B0, B1, B2).
using Boundary = std::array<SurdScalar, 6>;
Boundary boundary_a3_data(const Vec3& p0, const Vec3& p1, const helix::HelixBasis& basis, const RatFun& tau_sigma);

/// Raised when the endpoint system is solvable only with a nonpositive weight.
class NoPositiveWeightsError : public Error {
 public:
  NoPositiveWeightsError(const std::string& detail, Bezier3 solution)
      : Error(ErrorKind::NoPositiveWeights, detail), solution_(std::move(solution)) {}
  const Bezier3& solution() const noexcept { return solution_; }

 private:
  Bezier3 solution_;
};

/// Closed-form cubic rational Bezier matching six boundary values. Throws
/// SystemSingular or NoPositiveWeightsError.
Bezier3 solve_bezier(const Boundary& b);

/// Largest deviation of a3 and its first two derivatives from the boundary data.
Real boundary_residual(const RatFun& a3, const Boundary& b);

struct HermiteSolution {
  helix::RationalHelix helix;
  Bezier3 bezier;
  RatFun b1, b2;
  QMat rotation = identity();
  bool rotated = false;
  bool tangents_exact = true;
  Real position_residual0 = 0, position_residual1 = 0;
  Real tangent_angle0 = 0, tangent_angle1 = 0;
  Real boundary_residual = 0;
};

HermiteSolution interpolate(const HermiteData& data, const HermiteOptions& options = {});

/// Applies a constant rational rotation to a vector field.
RVF3 rotate(const QMat& m, const RVF3& v);

}  // namespace helixforge::hermite
