#include "helixforge/hermite/hermite.hpp"

#include <cmath>

namespace helixforge::hermite {

namespace {

using curves::RealVec;

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

// Continued-fraction rounding of x to a rational within tol.
Rational rationalize(const Real& x, const Real& tol) {
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real y = x;
  for (int i = 0; i < 200; ++i) {
    Real fl = floor(y);
    Integer a = fl.convert_to<Integer>();
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    Rational approx(h1, k1);
    if (abs(to_real(approx) - x) < tol) return approx;
    Real frac = y - fl;
    if (frac == 0) return approx;
    y = 1 / frac;
  }
  return Rational(h1, k1);
}

SurdScalar S(const Rational& x) { return SurdScalar(x); }

Vec3 to_vec(const QVec& q) { return {S(q[0]), S(q[1]), S(q[2])}; }

Real vec_norm(const Vec3& v) {
  Real s = 0;
  for (const auto& x : v) s += x.to_real() * x.to_real();
  return sqrt(s);
}

bool near_pole(const QVec& t) {
  double n = std::sqrt(std::pow(t[0].convert_to<double>(), 2) + std::pow(t[1].convert_to<double>(), 2) +
                       std::pow(t[2].convert_to<double>(), 2));
  if (n == 0) return false;
  double dx = t[0].convert_to<double>() / n, dy = t[1].convert_to<double>() / n,
         dz = t[2].convert_to<double>() / n - 1.0;
  return std::sqrt(dx * dx + dy * dy + dz * dz) < 1e-6;
}

}  // namespace

QMat identity() { return {QVec{1, 0, 0}, QVec{0, 1, 0}, QVec{0, 0, 1}}; }

QMat transpose(const QMat& m) {
  QMat t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Vec3 mat_vec(const QMat& m, const Vec3& v) {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = S(m[i][0]) * v[0] + S(m[i][1]) * v[1] + S(m[i][2]) * v[2];
  return out;
}

QMat rotation_from_quaternion(const Rational& w, const Rational& x, const Rational& y, const Rational& z) {
  Rational n = w * w + x * x + y * y + z * z;
  if (n == 0) throw Error(ErrorKind::Schema, "zero quaternion");
  QMat m{QVec{w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)},
         QVec{2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)},
         QVec{2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z}};
  for (auto& row : m)
    for (auto& v : row) v /= n;
  return m;
}

RVF3 rotate(const QMat& m, const RVF3& v) {
  RVF3 out;
  for (int i = 0; i < 3; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    out[i] = RatFun(S(row[0])) * v[0] + RatFun(S(row[1])) * v[1] + RatFun(S(row[2])) * v[2];
  }
  return out;
}

UnitTangent normalize_tangent(const QVec& v) {
  Rational n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (n2 == 0) throw Error(ErrorKind::DegenerateIndicatrix, "zero tangent vector");
  if (auto n = rational_sqrt(n2)) return {{v[0] / *n, v[1] / *n, v[2] / *n}, true};
  // round the stereographic preimage, then map back: the result is exactly unit
  Real n = sqrt(to_real(n2));
  Real x = to_real(v[0]) / n, y = to_real(v[1]) / n, z = to_real(v[2]) / n;
  if (z > Real("0.999999")) throw Error(ErrorKind::PoleTangent, "tangent at the projection pole");
  Real tol("1e-45");
  Rational b1 = rationalize(x / (1 - z), tol), b2 = rationalize(y / (1 - z), tol);
  Rational s = b1 * b1 + b2 * b2;
  return {{2 * b1 / (s + 1), 2 * b2 / (s + 1), (s - 1) / (s + 1)}, false};
}

std::pair<RatFun, RatFun> project_tangents(const QVec& t0, const QVec& t1, const Rational& k) {
  for (const QVec* t : {&t0, &t1})
    if ((*t)[2] == 1) throw Error(ErrorKind::PoleTangent, "tangent equals the projection pole (0, 0, 1)");
  Rational b0x = t0[0] / (1 - t0[2]), b0y = t0[1] / (1 - t0[2]);
  Rational b1x = t1[0] / (1 - t1[2]), b1y = t1[1] / (1 - t1[2]);
  if (k == 0) {
    return {RatFun(field::Polynomial({S(b0x), S(b1x - b0x)})), RatFun(field::Polynomial({S(b0y), S(b1y - b0y)}))};
  }
  // z(t) = (B0 (1 - t) + lambda B1 t) / (1 - t + lambda t), lambda = 1 + i k: a circle through B0 and B1
  RatFun t = RatFun::t();
  RatFun one(1);
  RatFun K{S(k)};
  RatFun nr = RatFun(S(b0x)) * (one - t) + RatFun(S(b1x - k * b1y)) * t;
  RatFun ni = RatFun(S(b0y)) * (one - t) + RatFun(S(b1y + k * b1x)) * t;
  RatFun den = one + K * K * t * t;
  return {(nr + K * t * ni) / den, (ni - K * t * nr) / den};
}

Boundary boundary_a3_data(const Vec3& p0, const Vec3& p1, const helix::HelixBasis& basis, const RatFun& tau_sigma) {
  RVF3 w2p = basis.w2.derivative();
  RatFun dK = tau_sigma.derivative();
  Boundary out;
  for (int end = 0; end < 2; ++end) {
    SurdScalar s(end);
    const Vec3& p = end == 0 ? p0 : p1;
    SurdScalar pw2 = curves::dot(p, basis.w2(s));
    SurdScalar pw3 = curves::dot(p, basis.w3(s));
    SurdScalar pw2p = curves::dot(p, w2p(s));
    SurdScalar K = tau_sigma(s), Kp = dK(s);
    std::size_t o = static_cast<std::size_t>(3 * end);
    out[o] = pw3;
    out[o + 1] = -K * pw2;
    out[o + 2] = -(K * pw2p + Kp * pw2);
  }
  return out;
}

Bezier3 solve_bezier(const Boundary& b) {
  const SurdScalar &A0 = b[0], &A1 = b[1], &A2 = b[2], &B0 = b[3], &B1 = b[4], &B2 = b[5];
  // Second-derivative conditions at both ends, linear in (w1, w2).
  SurdScalar m11 = SurdScalar(-6) * A1, m12 = SurdScalar(6) * (B0 - A0);
  SurdScalar m21 = SurdScalar(6) * (A0 - B0), m22 = SurdScalar(6) * B1;
  SurdScalar r1 = SurdScalar(2) * B1 - SurdScalar(2) * A1 + A2;
  SurdScalar r2 = SurdScalar(2) * B1 - SurdScalar(2) * A1 + B2;
  SurdScalar det = m11 * m22 - m12 * m21;
  if (det.is_zero()) throw Error(ErrorKind::SystemSingular, "endpoint derivative system is singular");
  Bezier3 out;
  out.w1 = (r1 * m22 - m12 * r2) / det;
  out.w2 = (m11 * r2 - r1 * m21) / det;
  SurdScalar third(Rational(1, 3));
  SurdScalar P1 = out.w1 * A0 + A1 * third;
  SurdScalar P2 = out.w2 * B0 - B1 * third;
  out.c[0] = A0;
  out.c[3] = B0;
  out.c[1] = out.w1.is_zero() ? SurdScalar() : P1 / out.w1;
  out.c[2] = out.w2.is_zero() ? SurdScalar() : P2 / out.w2;
  if (out.w1.sign() <= 0 || out.w2.sign() <= 0)
    throw NoPositiveWeightsError("weights w1 = " + out.w1.to_string() + ", w2 = " + out.w2.to_string(), out);
  return out;
}

Real boundary_residual(const RatFun& a3, const Boundary& b) {
  RatFun d1 = a3.derivative(), d2 = d1.derivative();
  Real worst = 0;
  for (int end = 0; end < 2; ++end) {
    SurdScalar s(end);
    std::size_t o = static_cast<std::size_t>(3 * end);
    for (auto diff : {a3(s) - b[o], d1(s) - b[o + 1], d2(s) - b[o + 2]}) {
      Real v = abs(diff.to_real());
      if (v > worst) worst = v;
    }
  }
  return worst;
}

HermiteSolution interpolate(const HermiteData& data, const HermiteOptions& options) {
  HermiteSolution sol;
  if (options.frame_rotation) {
    sol.rotation = *options.frame_rotation;
    sol.rotated = true;
  } else if (near_pole(data.t0) || near_pole(data.t1)) {
    // cyclic coordinate permutations are exact rotations; take the first that clears the pole
    const QMat perms[2] = {{QVec{0, 1, 0}, QVec{0, 0, 1}, QVec{1, 0, 0}}, {QVec{0, 0, 1}, QVec{1, 0, 0}, QVec{0, 1, 0}}};
    for (const auto& P : perms) {
      if (!near_pole(mat_vec(P, data.t0)) && !near_pole(mat_vec(P, data.t1))) {
        sol.rotation = P;
        sol.rotated = true;
        break;
      }
    }
  }
  const QMat& R = sol.rotation;
  UnitTangent q0 = normalize_tangent(mat_vec(R, data.t0));
  UnitTangent q1 = normalize_tangent(mat_vec(R, data.t1));
  sol.tangents_exact = q0.exact && q1.exact;
  Vec3 d;
  for (std::size_t i = 0; i < 3; ++i) d[i] = data.p1[i] - data.p0[i];
  d = mat_vec(R, d);

  std::tie(sol.b1, sol.b2) = project_tangents(q0.t, q1.t, options.circle_bulge);
  RVF3 t = curves::stereographic_tangent(sol.b1, sol.b2);
  helix::AxisAngle axis = helix::axis_and_angle(t);
  helix::HelixBasis basis = helix::helix_basis(t, axis);
  Boundary bd = boundary_a3_data(Vec3{}, d, basis, helix::torsion_speed(t, axis));
  sol.bezier = solve_bezier(bd);
  helix::RationalHelix h = helix::helix_from_a3(sol.bezier.to_ratfun(), t);
  sol.boundary_residual = boundary_residual(h.a3, bd);

  // back to the caller's frame, then translate so that r(0) = p0
  QMat Rt = transpose(R);
  if (sol.rotated) {
    h.r = rotate(Rt, h.r);
    h.t = rotate(Rt, h.t);
    h.basis.w1 = rotate(Rt, h.basis.w1);
    h.basis.w2 = rotate(Rt, h.basis.w2);
    h.basis.w3 = rotate(Rt, h.basis.w3);
    h.basis.axis.direction = mat_vec(Rt, h.basis.axis.direction);
    h.basis.axis.u = mat_vec(Rt, h.basis.axis.u);
  }
  h.r += RVF3(data.p0);
  sol.helix = std::move(h);

  auto residual = [](const Vec3& a, const Vec3& b) {
    Vec3 diff{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    return vec_norm(diff);
  };
  sol.position_residual0 = residual(sol.helix.r(SurdScalar(0)), data.p0);
  sol.position_residual1 = residual(sol.helix.r(SurdScalar(1)), data.p1);
  auto angle = [](const Vec3& t, const QVec& ref) -> Real {
    Vec3 r = to_vec(ref);
    return atan2(vec_norm(curves::cross(t, r)), curves::dot(t, r).to_real());
  };
  sol.tangent_angle0 = angle(sol.helix.t(SurdScalar(0)), data.t0);
  sol.tangent_angle1 = angle(sol.helix.t(SurdScalar(1)), data.t1);
  return sol;
}

}  // namespace helixforge::hermite
