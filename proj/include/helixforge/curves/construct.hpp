#pragma once

#include "helixforge/curves/rvf3.hpp"
#include "helixforge/errors.hpp"

namespace helixforge::curves {

/// Unit tangent field (2 b1, 2 b2, b1^2 + b2^2 - 1) / (b1^2 + b2^2 + 1).
/// Throws DegenerateIndicatrix when both b1 and b2 are constant.
RVF3 stereographic_tangent(const RatFun& b1, const RatFun& b2);

/// Cubic rational Bezier function with end weights 1.
struct Bezier3 {
  std::array<SurdScalar, 4> c;
  SurdScalar w1{1};
  SurdScalar w2{1};

  /// Throws DenominatorRootInDomain when the weight polynomial vanishes on [0, 1].
  RatFun to_ratfun() const;
};

RatFun rational_bezier3(const SurdScalar& c0, const SurdScalar& c1, const SurdScalar& c2, const SurdScalar& c3,
                        const SurdScalar& w1, const SurdScalar& w2);

/// Rational PH curve r = a1 v + a2 v' + a3 (v x v') with r' = g v.
struct PHCurve {
  RVF3 r;
  RVF3 v;
  RatFun a1, a2, a3;
  RatFun g;
  Warnings warnings;
};

/// The tangent-field construction. v is flipped (and a1, a2, g negated with it) when
/// needed so that g(1/2) > 0; r itself does not depend on that choice.
PHCurve ph_curve_from_tangent(const RatFun& a3, const RVF3& v);

struct A3Recovery {
  RatFun a3;
  /// f = det(r, v, v') = a3 |v x v'|^2
  RatFun f;
};

A3Recovery a3_recover(const RVF3& r, const RVF3& v);

/// Closed-form PH curve (f w' x w'' + f' w'' x w + f'' w x w') / det(w, w', w''), w = v x v'.
RVF3 farouki_sir_oracle(const RatFun& f, const RVF3& v);

}  // namespace helixforge::curves
