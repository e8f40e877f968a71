#include "helixforge/rmf/frame.hpp"

#include <array>
#include <cmath>

#include "helixforge/field/numeric.hpp"
#include "helixforge/field/sturm.hpp"

namespace helixforge::rmf {

namespace {

using DVec = std::array<double, 3>;

struct NumericField {
  std::array<field::NumericRatFun<double>, 3> c;
  explicit NumericField(const RVF3& v) : c{field::NumericRatFun<double>(v[0]), field::NumericRatFun<double>(v[1]),
                                           field::NumericRatFun<double>(v[2])} {}
  DVec operator()(double t) const { return {c[0](t), c[1](t), c[2](t)}; }
};

double ddot(const DVec& a, const DVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ApproxRMF assemble_frame(const helix::RationalHelix& h, const Polynomial& a, const Polynomial& b, int samples) {
  Polynomial g = field::gcd(a, b);
  if (g.degree() > 0 && field::has_root_in(g, 0, 1))
    throw Error(ErrorKind::DenominatorRootInDomain, "a and b vanish together inside [0, 1]");
  if (a.degree() < 0 && b.degree() < 0) throw Error(ErrorKind::DenominatorRootInDomain, "a = b = 0");
  RatFun A(a), B(b);
  RatFun den = A * A + B * B;
  RatFun c = (A * A - B * B) / den;
  RatFun s = RatFun(2) * A * B / den;
  ApproxRMF out;
  out.a = a;
  out.b = b;
  out.f1 = h.t;
  out.f2 = -(c * h.basis.w2 - s * h.basis.w3);
  out.f3 = -(s * h.basis.w2 + c * h.basis.w3);
  out.rmf_condition_error = rmf_condition_error(out, 0, 1, samples);
  return out;
}

double rmf_condition_error(const ApproxRMF& frame, double lo, double hi, int samples) {
  NumericField d2(frame.f2.derivative()), f3(frame.f3);
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * i / (samples - 1);
    worst = std::max(worst, std::abs(ddot(d2(t), f3(t))));
  }
  return worst;
}

double exact_frame_rmf_error(const helix::RationalHelix& h, const AngleFunction& theta, int samples) {
  NumericField w2(h.basis.w2), w3(h.basis.w3), dw2(h.basis.w2.derivative()), dw3(h.basis.w3.derivative());
  const double step = 1e-3;
  const double lo = theta.t0 + 2 * step, hi = theta.t1 - 2 * step;
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * i / (samples - 1);
    double th = theta(t);
    double dth = (theta(t - 2 * step) - 8 * theta(t - step) + 8 * theta(t + step) - theta(t + 2 * step)) / (12 * step);
    double c = std::cos(th), s = std::sin(th);
    DVec a2 = w2(t), a3 = w3(t), b2 = dw2(t), b3 = dw3(t);
    DVec f3, df2;
    for (int j = 0; j < 3; ++j) {
      f3[j] = -s * a2[j] + c * a3[j];
      df2[j] = dth * (-s * a2[j] + c * a3[j]) + c * b2[j] + s * b3[j];
    }
    worst = std::max(worst, std::abs(ddot(df2, f3)));
  }
  return worst;
}

double rrmf_residual_bridge(const helix::RationalHelix& h, const Polynomial& a, const Polynomial& b, double lo,
                            double hi, int samples) {
  RatFun A(a), B(b);
  field::NumericRatFun<double> lhs((A * B.derivative() - A.derivative() * B) / (A * A + B * B));
  NumericField dt(h.t.derivative());
  const auto& ax = h.basis.axis;
  double cot_psi = to_real(ax.c).convert_to<double>() / ax.sqrt_e_prime.to_double();
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * i / (samples - 1);
    DVec v = dt(t);
    double rhs = 0.5 * cot_psi * std::sqrt(ddot(v, v));
    worst = std::max(worst, std::abs(lhs(t) - rhs));
  }
  return worst;
}

namespace {

struct HalfAngle {
  Integer u, v;
  double phi;
};

HalfAngle rational_half_angle(double phi) {
  if (phi == 0) return {0, 1, 0};
  const double scale = 1 << 20;
  Integer u(static_cast<long long>(std::llround(std::sin(phi / 2) * scale)));
  Integer v(static_cast<long long>(std::llround(std::cos(phi / 2) * scale)));
  Integer g = boost::multiprecision::gcd(u, v);
  if (g != 0) {
    u /= g;
    v /= g;
  }
  return {u, v, 2 * std::atan2(u.convert_to<double>(), v.convert_to<double>())};
}

void split(const AngleFunction& th, double lo, double hi, int depth, std::vector<std::pair<double, double>>& out,
           bool allow_zero) {
  double mid_phi = allow_zero ? 0 : th((lo + hi) / 2);
  double worst = 0;
  for (int i = 0; i <= 64; ++i) worst = std::max(worst, std::abs(th(lo + (hi - lo) * i / 64) - mid_phi));
  if (worst < 0.8 * kPi || depth > 20) {
    out.emplace_back(lo, hi);
    return;
  }
  split(th, lo, (lo + hi) / 2, depth + 1, out, false);
  split(th, (lo + hi) / 2, hi, depth + 1, out, false);
}

}  // namespace

RmfApproximation approximate_rmf(const helix::RationalHelix& h, int m, int k, double theta0,
                                 const MinimaxOptions& options, double lo, double hi) {
  RmfApproximation out;
  out.theta = theta(h, theta0, 1e-12, lo, hi);
  std::vector<std::pair<double, double>> ranges;
  split(out.theta, lo, hi, 0, ranges, true);
  const bool single = ranges.size() == 1;
  for (auto [plo, phi_hi] : ranges) {
    RmfPiece piece;
    piece.lo = plo;
    piece.hi = phi_hi;
    HalfAngle pre = single ? HalfAngle{0, 1, 0} : rational_half_angle(out.theta((plo + phi_hi) / 2));
    piece.u = pre.u;
    piece.v = pre.v;
    const AngleFunction& th = out.theta;
    double shift = pre.phi;
    piece.fit = minimax_rational([&th, shift](double t) { return std::tan((th(t) - shift) / 2); }, plo, phi_hi, m, k,
                                 options);
    Polynomial a = exact_polynomial(piece.fit.p), b = exact_polynomial(piece.fit.q);
    if (pre.u != 0) {
      field::SurdScalar U{Rational(pre.u)}, V{Rational(pre.v)};
      Polynomial a2 = a * V + b * U, b2 = b * V - a * U;
      a = a2;
      b = b2;
    }
    piece.frame = assemble_frame(h, a, b, 2);
    piece.frame.minimax_error = piece.fit.eps;
    piece.frame.rmf_condition_error = rmf_condition_error(piece.frame, plo, phi_hi);
    for (const auto& w : piece.fit.warnings) out.theta.warnings.push_back(w);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace helixforge::rmf
