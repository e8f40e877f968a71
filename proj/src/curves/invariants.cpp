#include "helixforge/curves/invariants.hpp"

namespace helixforge::curves {

namespace {

std::int64_t squarefree_part(const SurdScalar& c) {
  if (!c.is_rational() || c.sign() <= 0) return 0;
  auto s = SurdScalar::sqrt_of(c.rational_part());
  return s.discriminant();
}

}  // namespace

std::optional<RatFun> ratfun_sqrt(const RatFun& f, std::int64_t hint_e) {
  if (f.is_zero()) return RatFun();
  auto den = f.den().sqrt(hint_e);
  if (!den) return std::nullopt;
  auto num = f.num().sqrt(hint_e);
  if (!num && hint_e == 0) {
    // a rational square may still need one surd: k * P^2 with k not a square
    if (std::int64_t e = squarefree_part(f.num().leading()); e > 1) num = f.num().sqrt(e);
  }
  if (!num) return std::nullopt;
  RatFun root(*num, *den);
  if (root(SurdScalar(Rational(1, 2))).sign() < 0) root = -root;
  return root;
}

CurveInvariants curvature_torsion_speed(const RVF3& r) {
  CurveInvariants out;
  RVF3 r1 = r.derivative();
  if (r1.is_zero()) throw Error(ErrorKind::ZeroSpeedCurve, "r' vanishes identically");
  RVF3 r2 = r1.derivative();
  RVF3 r3 = r2.derivative();
  RVF3 c = cross(r1, r2);
  RatFun c2 = dot(c, c);
  out.tau = c2.is_zero() ? RatFun() : dot(c, r3) / c2;

  RatFun speed2 = dot(r1, r1);
  std::int64_t e = r.discriminant();
  try {
    out.sigma = ratfun_sqrt(speed2, e);
  } catch (const Error&) {
    out.sigma.reset();
  }
  if (!out.sigma)
    out.warnings.push_back({ErrorKind::NotPythagorean, "|r'|^2 is not a perfect square; speed is sampled"});

  if (out.sigma) {
    if (c2.is_zero()) {
      out.kappa = RatFun();
    } else {
      try {
        std::int64_t hint = e != 0 ? e : squarefree_part(c2.num().leading());
        if (auto cn = ratfun_sqrt(c2, hint)) out.kappa = *cn / (*out.sigma * *out.sigma * *out.sigma);
      } catch (const Error&) {
        // |r' x r''| lives in a different quadratic field than r; keep the sampled curvature
      }
    }
  }

  out.sigma_at = [r1](const Real& t) { return norm(r1.evaluate(t)); };
  out.kappa_at = [r1, c](const Real& t) {
    Real s = norm(r1.evaluate(t));
    return norm(c.evaluate(t)) / (s * s * s);
  };
  return out;
}

}  // namespace helixforge::curves
