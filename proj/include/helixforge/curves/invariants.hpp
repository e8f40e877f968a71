#pragma once

#include <functional>
#include <optional>

#include "helixforge/curves/rvf3.hpp"
#include "helixforge/errors.hpp"

namespace helixforge::curves {

using RealFn = std::function<Real(const Real&)>;

/// Exact square root of a rational function when num and den are both perfect
/// squares in Q(sqrt(e)); the root is signed positive at t = 1/2.
std::optional<RatFun> ratfun_sqrt(const RatFun& f, std::int64_t hint_e = 0);

struct CurveInvariants {
  /// det(r', r'', r''') / |r' x r''|^2, zero for straight lines.
  RatFun tau;
  /// Speed, exact when r is PH; sign fixed positive at t = 1/2.
  std::optional<RatFun> sigma;
  /// Signed curvature |r' x r''| / sigma^3 when the square root is exact.
  std::optional<RatFun> kappa;
  RealFn sigma_at;  ///< |r'(t)|
  RealFn kappa_at;  ///< |r' x r''| / |r'|^3, always nonnegative
  Warnings warnings;
};

/// Throws ZeroSpeedCurve when r' vanishes identically.
CurveInvariants curvature_torsion_speed(const RVF3& r);

}  // namespace helixforge::curves
