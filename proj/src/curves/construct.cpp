#include "helixforge/curves/construct.hpp"

#include "helixforge/field/sturm.hpp"

namespace helixforge::curves {

RVF3 stereographic_tangent(const RatFun& b1, const RatFun& b2) {
  if (b1.derivative().is_zero() && b2.derivative().is_zero())
    throw Error(ErrorKind::DegenerateIndicatrix, "b1 and b2 are both constant; the indicatrix is a point");
  RatFun s = b1 * b1 + b2 * b2;
  RatFun inv = (s + RatFun(1)).inverse();
  return RVF3(RatFun(2) * b1 * inv, RatFun(2) * b2 * inv, (s - RatFun(1)) * inv);
}

RatFun Bezier3::to_ratfun() const { return rational_bezier3(c[0], c[1], c[2], c[3], w1, w2); }

RatFun rational_bezier3(const SurdScalar& c0, const SurdScalar& c1, const SurdScalar& c2, const SurdScalar& c3,
                        const SurdScalar& w1, const SurdScalar& w2) {
  const Polynomial s({SurdScalar(1), SurdScalar(-1)});  // 1 - t
  const Polynomial t = Polynomial::t();
  const Polynomial b0 = s * s * s;
  const Polynomial b1 = SurdScalar(3) * s * s * t;
  const Polynomial b2 = SurdScalar(3) * s * t * t;
  const Polynomial b3 = t * t * t;
  Polynomial den = b0 + w1 * b1 + w2 * b2 + b3;
  if (field::has_root_in(den, 0, 1))
    throw Error(ErrorKind::DenominatorRootInDomain, "rational Bezier weight polynomial vanishes on [0, 1]");
  Polynomial num = c0 * b0 + (c1 * w1) * b1 + (c2 * w2) * b2 + c3 * b3;
  return RatFun(num, den);
}

PHCurve ph_curve_from_tangent(const RatFun& a3, const RVF3& v_in) {
  PHCurve out;
  RVF3 v = v_in;
  RVF3 v1 = v.derivative();
  RVF3 v2 = v1.derivative();
  RVF3 w = cross(v, v1);
  RatFun W = dot(w, w);
  if (W.is_zero()) throw Error(ErrorKind::DependentTangentField, "v x v' vanishes identically");
  RatFun det = dot(w, v2);
  if (det.is_zero())
    throw Error(ErrorKind::DependentTangentField, "det(v, v', v'') vanishes identically; a2 is underdetermined");
  if (field::has_root_in(W.num(), 0, 1))
    out.warnings.push_back({ErrorKind::DependentTangentField, "v and v' become parallel inside [0, 1]"});

  RatFun X = dot(w, cross(v, v2));
  RatFun vv = dot(v, v);
  RatFun vv1 = dot(v, v1);
  RatFun vv2 = dot(v, v2);
  RatFun M = vv1 * vv2 - dot(v1, v2) * vv;

  RatFun a2 = -(a3.derivative() * W + a3 * X) / det;
  RatFun a1 = -a2.derivative() + (a2 * M + a3 * vv * det) / W;
  RatFun g = (a1.derivative() * vv + (a1 + a2.derivative()) * vv1 + a2 * vv2) / vv;

  SurdScalar g_half = g(SurdScalar(Rational(1, 2)));
  if (g_half.sign() < 0) {
    v = -v;
    v1 = -v1;
    a1 = -a1;
    a2 = -a2;
    g = -g;
  }

  out.r = a1 * v + a2 * v1 + a3 * w;
  if (out.r.derivative() != g * v)
    throw Error(ErrorKind::InvariantViolation, "constructed curve does not satisfy r' = g v");
  if (g.is_zero()) {
    out.warnings.push_back({ErrorKind::ZeroSpeedCurve, "r' vanishes identically; the curve is a single point"});
  } else if (field::has_root_in(g.num(), 0, 1)) {
    out.warnings.push_back({ErrorKind::CuspDetected, "g has a root in [0, 1]"});
  }
  out.v = std::move(v);
  out.a1 = std::move(a1);
  out.a2 = std::move(a2);
  out.a3 = a3;
  out.g = std::move(g);
  return out;
}

A3Recovery a3_recover(const RVF3& r, const RVF3& v) {
  RVF3 w = cross(v, v.derivative());
  RatFun W = dot(w, w);
  if (W.is_zero()) throw Error(ErrorKind::DependentTangentField, "v x v' vanishes identically");
  RatFun f = dot(w, r);  // det(r, v, v') = r . (v x v')
  return {f / W, f};
}

RVF3 farouki_sir_oracle(const RatFun& f, const RVF3& v) {
  RVF3 w = cross(v, v.derivative());
  RVF3 w1 = w.derivative();
  RVF3 w2 = w1.derivative();
  RatFun den = dot(w, cross(w1, w2));
  if (den.is_zero()) throw Error(ErrorKind::OracleDegenerate, "det(w, w', w'') vanishes identically");
  RVF3 num = f * cross(w1, w2) + f.derivative() * cross(w2, w) + f.derivative().derivative() * cross(w, w1);
  return num / den;
}

}  // namespace helixforge::curves
