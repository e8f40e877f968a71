#include "helixforge/helix/helix.hpp"

#include <algorithm>
#include <sstream>

#include "helixforge/curves/construct.hpp"
#include "helixforge/field/sturm.hpp"

namespace helixforge::helix {

namespace {

using curves::RealVec;

RVF3 constant_field(const Vec3& v) { return RVF3(v); }

// Sign of a rational function at the first of a few sample points where it is nonzero.
int sign_near_half(const RatFun& f) {
  for (Rational s : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 5), Rational(4, 5)}) {
    int sg = f(SurdScalar(s)).sign();
    if (sg != 0) return sg;
  }
  return 1;
}

}  // namespace

AxisAngle axis_and_angle(const RVF3& t) {
  if (t.discriminant() != 0) throw Error(ErrorKind::NotHelical, "tangent indicatrix must have rational coefficients");
  RVF3 t1 = t.derivative();
  RVF3 C = cross(t1, t1.derivative());
  if (C.is_zero()) throw Error(ErrorKind::DegenerateAngle, "t' x t'' vanishes identically; the tangent is constant");

  int k = 0;
  while (C[k].is_zero()) ++k;
  std::array<Rational, 3> ratio;
  for (int i = 0; i < 3; ++i) {
    RatFun q = C[i] / C[k];
    if (!q.is_constant() || !q.constant_value().is_rational())
      throw Error(ErrorKind::NotHelical, "t' x t'' changes direction");
    ratio[static_cast<std::size_t>(i)] = q.constant_value().rational_part();
  }
  Integer den = 1;
  for (const auto& r : ratio) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(r));
  std::array<Integer, 3> D;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    D[i] = boost::multiprecision::numerator(ratio[i]) * (den / boost::multiprecision::denominator(ratio[i]));
    g = boost::multiprecision::gcd(g, D[i]);
  }
  for (auto& x : D) x /= g;
  if (sign_near_half(C[k] / RatFun(SurdScalar(Rational(D[static_cast<std::size_t>(k)])))) < 0)
    for (auto& x : D) x = -x;

  AxisAngle out;
  for (std::size_t i = 0; i < 3; ++i) out.direction[i] = SurdScalar(Rational(D[i]));
  RatFun c = dot(t, constant_field(out.direction));
  if (!c.is_constant()) throw Error(ErrorKind::NotHelical, "t . D is not constant");
  out.c = c.constant_value().rational_part();
  if (out.c == 0) throw Error(ErrorKind::PlanarCurve, "t is orthogonal to the axis; the indicatrix is a great circle");
  out.d = Rational(D[0] * D[0] + D[1] * D[1] + D[2] * D[2]);
  out.e_prime = out.d - out.c * out.c;
  if (out.e_prime == 0) throw Error(ErrorKind::DegenerateAngle, "t is parallel to the axis");
  out.sqrt_e_prime = SurdScalar::sqrt_of(out.e_prime);
  out.e = out.sqrt_e_prime.discriminant();
  SurdScalar sqrt_d = SurdScalar::sqrt_of(out.d);
  for (std::size_t i = 0; i < 3; ++i) out.u[i] = out.direction[i] / sqrt_d;
  out.cos_psi = SurdScalar(out.c) / sqrt_d;
  out.sin2_psi = out.e_prime / out.d;
  return out;
}

HelixBasis helix_basis(const RVF3& t, const AxisAngle& axis) {
  if (axis.e_prime <= 0) throw Error(ErrorKind::DegenerateAngle, "sin(psi) = 0");
  RatFun inv(axis.sqrt_e_prime.inverse());
  RVF3 D = constant_field(axis.direction);
  HelixBasis b;
  b.axis = axis;
  b.w1 = t;
  b.w2 = cross(D, t) * inv;
  b.w3 = (D - RatFun(SurdScalar(axis.c)) * t) * inv;
  const RVF3* w[3] = {&b.w1, &b.w2, &b.w3};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      if (dot(*w[i], *w[j]) != RatFun(i == j ? 1 : 0))
        throw Error(ErrorKind::InvariantViolation, "helix basis is not orthonormal");
  return b;
}

RatFun torsion_speed(const RVF3& t, const AxisAngle& axis) {
  RatFun delta = triple_det(constant_field(axis.direction), t, t.derivative());
  return RatFun(SurdScalar(axis.c)) * delta / RatFun(SurdScalar(axis.e_prime));
}

RationalHelix helix_from_a3(const RatFun& a3, const RVF3& t) {
  RationalHelix h;
  h.t = t;
  h.basis = helix_basis(t, axis_and_angle(t));
  const AxisAngle& ax = h.basis.axis;
  RVF3 t1 = t.derivative();
  RatFun delta = triple_det(constant_field(ax.direction), t, t1);
  if (delta.is_zero()) throw Error(ErrorKind::NotHelical, "det(u, t, t') vanishes identically");

  RatFun ep(SurdScalar(ax.e_prime));
  RatFun c(SurdScalar(ax.c));
  RatFun se(ax.sqrt_e_prime);
  h.a3 = a3;
  h.a2 = -a3.derivative() * ep / (c * delta);
  h.a1 = c * a3 / se - h.a2.derivative() * se / delta;
  h.sigma = h.a1.derivative() - h.a2 * delta / se;
  h.tau_sigma = c * delta / ep;
  h.r = h.a1 * t + h.a2 * h.basis.w2 + h.a3 * h.basis.w3;
  if (h.r.derivative() != h.sigma * t)
    throw Error(ErrorKind::InvariantViolation, "constructed helix does not satisfy r' = sigma t");

  if (h.sigma.is_zero()) {
    h.warnings.push_back({ErrorKind::ZeroSpeedCurve, "sigma vanishes identically; the curve is a single point"});
  } else {
    for (const auto& iv : field::isolate_roots(h.sigma.num(), 0, 1, Rational(1, Integer(1) << 40)))
      h.cusps.push_back(iv.approx());
    if (!h.cusps.empty()) {
      std::ostringstream os;
      os << "sigma vanishes at t =";
      for (double x : h.cusps) os << " " << x;
      h.warnings.push_back({ErrorKind::CuspDetected, os.str()});
    }
  }
  return h;
}

HelixReport helix_verify(const RVF3& r) {
  HelixReport rep;
  auto inv = curves::curvature_torsion_speed(r);
  RVF3 r1 = r.derivative();
  RVF3 r2 = r1.derivative();

  if (inv.tau.is_zero()) {
    rep.planar = true;
    rep.is_helix = true;
    rep.exact = true;
    return rep;
  }
  if (inv.kappa && !inv.kappa->is_zero()) {
    RatFun ratio = inv.tau / *inv.kappa;
    rep.exact = true;
    rep.is_helix = ratio.is_constant();
    if (rep.is_helix) rep.tau_over_kappa = ratio.constant_value().to_real();
  }

  // sampled ratio and Darboux-axis drift; the exact speed sign keeps the frame continuous across cusps
  constexpr int kSamples = 64;
  std::vector<Real> ratios;
  std::vector<RealVec> axes;
  for (int i = 0; i < kSamples; ++i) {
    Real s = (Real(i) + Real("0.5")) / kSamples;
    RealVec d1 = r1.evaluate(s);
    RealVec c = curves::cross(d1, r2.evaluate(s));
    Real speed = curves::norm(d1);
    Real cn = curves::norm(c);
    if (speed == 0 || cn == 0) continue;
    int sg = 1;
    if (inv.sigma && inv.sigma->evaluate(s) < 0) sg = -1;
    Real kappa = sg * cn / (speed * speed * speed);
    Real tau = inv.tau.evaluate(s);
    ratios.push_back(tau / kappa);
    RealVec axis;
    for (int j = 0; j < 3; ++j) axis[j] = tau * sg * d1[j] / speed + kappa * c[j] / cn;
    Real an = curves::norm(axis);
    for (auto& x : axis) x /= an;
    axes.push_back(axis);
  }
  if (!ratios.empty()) {
    auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    rep.max_spread = *hi - *lo;
    if (!rep.exact) {
      rep.is_helix = rep.max_spread < Real("1e-20");
      rep.tau_over_kappa = ratios.front();
    }
    for (const auto& a : axes) {
      Real dp = 0, dm = 0;
      for (int j = 0; j < 3; ++j) {
        dp += (a[j] - axes.front()[j]) * (a[j] - axes.front()[j]);
        dm += (a[j] + axes.front()[j]) * (a[j] + axes.front()[j]);
      }
      Real dev = sqrt(std::min(dp, dm));
      if (dev > rep.axis_residual) rep.axis_residual = dev;
    }
  }
  return rep;
}

RatFun rrmf_check(const RationalHelix& h, const Polynomial& a, const Polynomial& b) {
  if (field::gcd(a, b).degree() > 0) throw Error(ErrorKind::NotCoprime, "a and b share a nonconstant factor");
  RatFun A(a), B(b);
  RatFun lhs = (A * B.derivative() - A.derivative() * B) / (A * A + B * B);
  return lhs - h.tau_sigma / RatFun(2);
}

RrmfSearchResult rrmf_degree2_search(const Rational& m, const Rational& n, int max_deg) {
  RrmfSearchResult out;
  RatFun b1(Polynomial({SurdScalar(0), SurdScalar(m)}));
  RatFun b2{SurdScalar(n)};
  RVF3 t = curves::stereographic_tangent(b1, b2);
  if (n == 0) {
    out.planar = true;
    out.feasible = true;
    out.a = Polynomial();
    out.b = Polynomial(1);
    out.rhs = RatFun();
    out.certificate.push_back("n = 0: the indicatrix is a great circle, tau = 0, and a = 0, b = 1 solves");
    return out;
  }
  AxisAngle ax = axis_and_angle(t);
  RatFun delta = triple_det(constant_field(ax.direction), t, t.derivative());
  out.rhs = RatFun(SurdScalar(ax.c)) * delta / RatFun(SurdScalar(Rational(ax.e_prime * 2)));

  const Polynomial& den = out.rhs.den();
  if (out.rhs.num().degree() != 0 || den.degree() != 2)
    throw Error(ErrorKind::InvariantViolation, "unexpected shape of the RRMF right-hand side");
  Rational lambda = out.rhs.num().coefficient(0).rational_part();
  Rational p = den.coefficient(1).rational_part();
  Rational q0 = den.coefficient(0).rational_part();
  Rational nu2 = q0 - p * p / 4;
  out.winding_square = lambda * lambda / nu2;

  auto str = [](const Rational& x) { return helixforge::to_string(x); };
  out.certificate.push_back("rhs = " + str(lambda) + " / (t^2 + " + str(p) + " t + " + str(q0) + ")");

  if (max_deg >= 0) {
    out.certificate.push_back("deg 0: a, b constant gives ab' - a'b = 0, but rhs != 0");
  }
  if (max_deg >= 1) {
    // a = a0 + a1 t, b = b0 + b1 t, K0 = a0 b1 - a1 b0:
    //   t^2: K0 = lambda (a1^2 + b1^2),  t: K0 p = 2 lambda (a0 a1 + b0 b1),  1: K0 q0 = lambda (a0^2 + b0^2)
    // Lagrange's identity (a0^2+b0^2)(a1^2+b1^2) = (a0 a1 + b0 b1)^2 + K0^2 then gives
    //   K0^2 (nu^2 / lambda^2 - 1) = 0.
    Rational factor = nu2 / (lambda * lambda) - 1;
    out.certificate.push_back("deg 1: coefficient matching + Lagrange identity give K0^2 * (" + str(factor) +
                              ") = 0");
    if (factor != 0) {
      out.certificate.push_back("deg 1: hence K0 = 0, so a1^2 + b1^2 = 0 and a0^2 + b0^2 = 0: a = b = 0, not coprime");
    } else {
      out.certificate.push_back("deg 1: elimination inconclusive (factor vanishes)");
    }
  }
  if (max_deg >= 2) {
    // With P = b + i a, (ab' - a'b)/(a^2 + b^2) = -Im(P'/P). Matching poles forces all non-real roots
    // of P onto x +- i nu, and -(k+ - k-) nu = lambda for integer multiplicities.
    out.certificate.push_back("any deg: partial fractions of -Im(P'/P), P = b + i a, force (k+ - k-)^2 = " +
                              str(out.winding_square));
  }
  bool integer_square = false;
  if (boost::multiprecision::denominator(out.winding_square) == 1) {
    Integer w = boost::multiprecision::numerator(out.winding_square);
    Integer s = boost::multiprecision::sqrt(w);
    integer_square = s * s == w && s > 0;
  }
  if (!integer_square) {
    out.certificate.push_back(str(out.winding_square) +
                              " is not the square of a nonzero integer: no coprime (a, b) exists");
    out.feasible = false;
  } else {
    out.certificate.push_back("winding test inconclusive for this tangent");
    out.feasible = false;
  }
  return out;
}

}  // namespace helixforge::helix
