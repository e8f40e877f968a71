#include "helixforge/surface/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "helixforge/field/sturm.hpp"
#include "helixforge/io/atomic_write.hpp"

namespace helixforge::surface {

namespace {

using field::Polynomial;
using RVec = curves::RealVec;

// u = (s - s0)/(s1 - s0) as a polynomial in s.
Polynomial unit_parameter(const Rational& s0, const Rational& s1) {
  Rational L = s1 - s0;
  return Polynomial({SurdScalar(Rational(-s0 / L)), SurdScalar(Rational(1 / L))});
}

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(const SurdScalar& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

RVec addr(const RVec& a, const RVec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
RVec scaler(const Real& s, const std::array<Real, 3>& v) { return {s * v[0], s * v[1], s * v[2]}; }

void check_profile_domain(const Rational& s0, const Rational& s1) {
  if (!(s1 > s0)) throw Error(ErrorKind::DomainMismatch, "profile domain is empty");
}

}  // namespace

ProfileCurve ProfileCurve::line(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2,
                                const Rational& s0, const Rational& s1) {
  check_profile_domain(s0, s1);
  ProfileCurve p;
  p.kind_ = ProfileKind::Line;
  p.s0_ = s0;
  p.s1_ = s1;
  p.breaks_ = {s0, s1};
  p.c1_.push_back(RatFun(Polynomial({SurdScalar(b1), SurdScalar(a1)})));
  p.c2_.push_back(RatFun(Polynomial({SurdScalar(b2), SurdScalar(a2)})));
  return p;
}

ProfileCurve ProfileCurve::polyline(std::vector<std::array<Rational, 2>> points, const Rational& s0,
                                    const Rational& s1) {
  check_profile_domain(s0, s1);
  if (points.size() < 2) throw Error(ErrorKind::DomainMismatch, "a polyline needs at least two points");
  ProfileCurve p;
  p.kind_ = ProfileKind::Polyline;
  p.s0_ = s0;
  p.s1_ = s1;
  const std::size_t n = points.size() - 1;
  Rational h = (s1 - s0) / static_cast<long>(n);
  for (std::size_t k = 0; k <= n; ++k) p.breaks_.push_back(s0 + h * static_cast<long>(k));
  for (std::size_t k = 0; k < n; ++k) {
    // c = P_k + (P_{k+1} - P_k)(s - s_k)/h
    for (int c = 0; c < 2; ++c) {
      Rational slope = (points[k + 1][c] - points[k][c]) / h;
      Rational icpt = points[k][c] - slope * p.breaks_[k];
      RatFun f(Polynomial({SurdScalar(icpt), SurdScalar(slope)}));
      (c == 0 ? p.c1_ : p.c2_).push_back(f);
    }
  }
  return p;
}

ProfileCurve ProfileCurve::rational_bezier(const std::vector<std::array<Rational, 2>>& control,
                                           const std::vector<Rational>& weights, const Rational& s0,
                                           const Rational& s1) {
  check_profile_domain(s0, s1);
  if (control.size() < 2 || control.size() != weights.size())
    throw Error(ErrorKind::DomainMismatch, "rational Bezier profile needs matching control points and weights");
  const unsigned n = static_cast<unsigned>(control.size() - 1);
  Polynomial u = unit_parameter(s0, s1);
  Polynomial one_minus_u = Polynomial(1) - u;
  Polynomial x, y, w;
  for (unsigned i = 0; i <= n; ++i) {
    Polynomial B = pow(u, i) * pow(one_minus_u, n - i) * SurdScalar(Rational(binomial(n, i)));
    Polynomial wB = B * SurdScalar(weights[i]);
    x = x + wB * SurdScalar(control[i][0]);
    y = y + wB * SurdScalar(control[i][1]);
    w = w + wB;
  }
  if (w.degree() < 0 || field::has_root_in(w, s0, s1))
    throw Error(ErrorKind::DenominatorRootInDomain, "profile weight function vanishes on its domain");
  ProfileCurve p;
  p.kind_ = ProfileKind::RationalBezier;
  p.s0_ = s0;
  p.s1_ = s1;
  p.breaks_ = {s0, s1};
  p.c1_.push_back(RatFun(x, w));
  p.c2_.push_back(RatFun(y, w));
  return p;
}

ProfileCurve ProfileCurve::rational(RatFun c1, RatFun c2, const Rational& s0, const Rational& s1) {
  check_profile_domain(s0, s1);
  for (const RatFun* f : {&c1, &c2})
    if (f->den().degree() > 0 && field::has_root_in(f->den(), s0, s1))
      throw Error(ErrorKind::DenominatorRootInDomain, "profile has a pole on its domain");
  ProfileCurve p;
  p.kind_ = ProfileKind::RationalBezier;
  p.s0_ = s0;
  p.s1_ = s1;
  p.breaks_ = {s0, s1};
  p.c1_.push_back(std::move(c1));
  p.c2_.push_back(std::move(c2));
  return p;
}

std::size_t ProfileCurve::piece_at(double s) const {
  std::size_t n = c1_.size();
  for (std::size_t k = 1; k < n; ++k)
    if (s < breaks_[k].convert_to<double>()) return k - 1;
  return n - 1;
}

SweepSurface sweep(const RVF3& spine, const RVF3& f2, const RVF3& f3, const ProfileCurve& profile,
                   const Rational& t0, const Rational& t1) {
  if (!(t1 > t0)) throw Error(ErrorKind::DomainMismatch, "empty spine interval");
  SweepSurface S;
  S.r = spine;
  S.f2 = f2;
  S.f3 = f3;
  S.profile = profile;
  S.t0 = t0;
  S.t1 = t1;
  return S;
}

SweepSurface sweep(const helix::RationalHelix& spine, const rmf::RmfPiece& piece, const ProfileCurve& profile,
                   const Rational& t0, const Rational& t1) {
  if (t0.convert_to<double>() < piece.lo || t1.convert_to<double>() > piece.hi)
    throw Error(ErrorKind::DomainMismatch, "surface interval exceeds the frame piece");
  return sweep(spine.r, piece.frame.f2, piece.frame.f3, profile, t0, t1);
}

SweepSurface sweep(const helix::RationalHelix& spine, const rmf::ApproxRMF& frame, const ProfileCurve& profile,
                   const Rational& t0, const Rational& t1) {
  if (!(frame.f1 == spine.t)) throw Error(ErrorKind::DomainMismatch, "frame does not belong to this spine");
  return sweep(spine.r, frame.f2, frame.f3, profile, t0, t1);
}

SweepSurface sweep_fsf(const helix::RationalHelix& spine, const ProfileCurve& profile, const Rational& t0,
                       const Rational& t1) {
  return sweep(spine.r, spine.basis.w2, spine.basis.w3, profile, t0, t1);
}

Vec3 evaluate(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t) {
  std::size_t k = S.profile.piece_at(s.to_double());
  return add(S.r(t), add(scale(S.profile.c1(k)(s), S.f2(t)), scale(S.profile.c2(k)(s), S.f3(t))));
}

Forms<SurdScalar> forms_exact(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t) {
  std::size_t k = S.profile.piece_at(s.to_double());
  const RatFun& c1 = S.profile.c1(k);
  const RatFun& c2 = S.profile.c2(k);
  RatFun c1d = c1.derivative(), c2d = c2.derivative();
  SurdScalar a = c1(s), b = c2(s), ad = c1d(s), bd = c2d(s), add_ = c1d.derivative()(s),
             bdd = c2d.derivative()(s);
  RVF3 r1 = S.r.derivative(), f21 = S.f2.derivative(), f31 = S.f3.derivative();
  Vec3 R1 = r1(t), R2 = r1.derivative()(t);
  Vec3 F2 = S.f2(t), F21 = f21(t), F22 = f21.derivative()(t);
  Vec3 F3 = S.f3(t), F31 = f31(t), F32 = f31.derivative()(t);

  Vec3 Ss = add(scale(ad, F2), scale(bd, F3));
  Vec3 St = add(R1, add(scale(a, F21), scale(b, F31)));
  Vec3 Sss = add(scale(add_, F2), scale(bdd, F3));
  Vec3 Sst = add(scale(ad, F21), scale(bd, F31));
  Vec3 Stt = add(R2, add(scale(a, F22), scale(b, F32)));
  Vec3 n = curves::cross(Ss, St);
  Forms<SurdScalar> f{curves::dot(Ss, Ss), curves::dot(Ss, St), curves::dot(St, St),
                      curves::dot(Sss, n),  curves::dot(Sst, n), curves::dot(Stt, n)};
  if ((f.E * f.G - f.F * f.F).sign() == 0) throw Error(ErrorKind::SingularPoint, "EG - F^2 = 0");
  return f;
}

SurdScalar gauss_curvature_exact(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t) {
  return forms_exact(S, s, t).K();
}

SurfaceEvaluator::SurfaceEvaluator(const SweepSurface& S) : S_(S) {
  RVF3 r[3] = {S.r, S.r.derivative(), {}};
  r[2] = r[1].derivative();
  RVF3 a[3] = {S.f2, S.f2.derivative(), {}};
  a[2] = a[1].derivative();
  RVF3 b[3] = {S.f3, S.f3.derivative(), {}};
  b[2] = b[1].derivative();
  for (int d = 0; d < 3; ++d)
    for (int c = 0; c < 3; ++c) {
      r_[d][c] = field::NumericRatFun<Real>(r[d][c]);
      f2_[d][c] = field::NumericRatFun<Real>(a[d][c]);
      f3_[d][c] = field::NumericRatFun<Real>(b[d][c]);
    }
  for (std::size_t k = 0; k < S.profile.pieces(); ++k) {
    Profile p;
    RatFun c1 = S.profile.c1(k), c2 = S.profile.c2(k);
    for (int d = 0; d < 3; ++d) {
      p.c1[d] = field::NumericRatFun<Real>(c1);
      p.c2[d] = field::NumericRatFun<Real>(c2);
      c1 = c1.derivative();
      c2 = c2.derivative();
    }
    profile_.push_back(std::move(p));
  }
}

void SurfaceEvaluator::check_domain(const Real& s, const Real& t) const {
  const Real slack("1e-30");
  if (s < to_real(S_.profile.s0()) - slack || s > to_real(S_.profile.s1()) + slack || t < to_real(S_.t0) - slack ||
      t > to_real(S_.t1) + slack)
    throw Error(ErrorKind::DomainMismatch, "surface evaluated outside its parameter domain");
}

SurfaceEvaluator::Column SurfaceEvaluator::column(const Real& t) const {
  if (t < to_real(S_.t0) - Real("1e-30") || t > to_real(S_.t1) + Real("1e-30"))
    throw Error(ErrorKind::DomainMismatch, "surface evaluated outside its parameter domain");
  Column col;
  for (int d = 0; d < 3; ++d)
    for (int c = 0; c < 3; ++c) {
      col.r[d][c] = r_[d][c](t);
      col.f2[d][c] = f2_[d][c](t);
      col.f3[d][c] = f3_[d][c](t);
    }
  return col;
}

curves::RealVec SurfaceEvaluator::point(const Column& col, const Real& s) const {
  check_domain(s, to_real(S_.t0));
  const Profile& p = profile_[S_.profile.piece_at(s.convert_to<double>())];
  Real a = p.c1[0](s), b = p.c2[0](s);
  return addr(RVec{col.r[0][0], col.r[0][1], col.r[0][2]}, addr(scaler(a, col.f2[0]), scaler(b, col.f3[0])));
}

Forms<Real> SurfaceEvaluator::forms(const Column& col, const Real& s) const {
  check_domain(s, to_real(S_.t0));
  const Profile& p = profile_[S_.profile.piece_at(s.convert_to<double>())];
  Real a = p.c1[0](s), b = p.c2[0](s), ad = p.c1[1](s), bd = p.c2[1](s), add_ = p.c1[2](s), bdd = p.c2[2](s);
  RVec Ss = addr(scaler(ad, col.f2[0]), scaler(bd, col.f3[0]));
  RVec St = addr(RVec{col.r[1][0], col.r[1][1], col.r[1][2]}, addr(scaler(a, col.f2[1]), scaler(b, col.f3[1])));
  RVec Sss = addr(scaler(add_, col.f2[0]), scaler(bdd, col.f3[0]));
  RVec Sst = addr(scaler(ad, col.f2[1]), scaler(bd, col.f3[1]));
  RVec Stt = addr(RVec{col.r[2][0], col.r[2][1], col.r[2][2]}, addr(scaler(a, col.f2[2]), scaler(b, col.f3[2])));
  RVec n = curves::cross(Ss, St);
  Forms<Real> f{curves::dot(Ss, Ss), curves::dot(Ss, St), curves::dot(St, St),
                curves::dot(Sss, n),  curves::dot(Sst, n), curves::dot(Stt, n)};
  Real det = f.E * f.G - f.F * f.F;
  if (!(det > Real("1e-40") * f.E * f.G) || f.E == 0 || f.G == 0)
    throw Error(ErrorKind::SingularPoint, "EG - F^2 vanishes at working precision");
  return f;
}

Real SurfaceEvaluator::mean_curvature(const Real& s, const Real& t) const {
  Forms<Real> f = forms(column(t), s);
  Real det = f.E * f.G - f.F * f.F;
  return (f.E * f.N - 2 * f.F * f.M + f.G * f.L) / (2 * det * sqrt(det));
}

namespace {

std::vector<Real> grid_params(const Rational& lo, const Rational& hi, int n) {
  std::vector<Real> out(n);
  for (int i = 0; i < n; ++i) out[i] = to_real(lo + (hi - lo) * Rational(i, n - 1));
  return out;
}

std::vector<SurfaceEvaluator::Column> columns(const SurfaceEvaluator& ev, const std::vector<Real>& ts, Exec exec) {
  const int nt = static_cast<int>(ts.size());
  std::vector<SurfaceEvaluator::Column> cols(nt);
  if (exec == Exec::Serial) {
    for (int j = 0; j < nt; ++j) cols[j] = ev.column(ts[j]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < nt; ++j) cols[j] = ev.column(ts[j]);
  }
  return cols;
}

// K at one grid point, NaN when singular. Shared by both execution paths.
double curvature_at(const SurfaceEvaluator& ev, const SurfaceEvaluator::Column& col, const Real& s,
                    unsigned char& singular) {
  try {
    singular = 0;
    return ev.forms(col, s).K().convert_to<double>();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularPoint) throw;
    singular = 1;
    return std::numeric_limits<double>::quiet_NaN();
  }
}

void check_grid(int ns, int nt) {
  if (ns < 2 || nt < 2) throw Error(ErrorKind::DomainMismatch, "grid needs at least 2 x 2 samples");
}

}  // namespace

CurvatureGrid curvature_grid(const SweepSurface& S, int ns, int nt, Exec exec) {
  check_grid(ns, nt);
  return curvature_grid(SurfaceEvaluator(S), ns, nt, exec);
}

CurvatureGrid curvature_grid(const SurfaceEvaluator& ev, int ns, int nt, Exec exec) {
  check_grid(ns, nt);
  const SweepSurface& S = ev.surface();
  std::vector<Real> ss = grid_params(S.profile.s0(), S.profile.s1(), ns);
  std::vector<Real> ts = grid_params(S.t0, S.t1, nt);
  auto cols = columns(ev, ts, exec);

  CurvatureGrid g;
  g.ns = ns;
  g.nt = nt;
  for (const auto& x : ss) g.s.push_back(x.convert_to<double>());
  for (const auto& x : ts) g.t.push_back(x.convert_to<double>());
  g.K.assign(static_cast<std::size_t>(ns) * nt, 0.0);
  g.singular.assign(g.K.size(), 0);
  if (exec == Exec::Serial) {
    for (int j = 0; j < nt; ++j)
      for (int i = 0; i < ns; ++i) {
        std::size_t idx = static_cast<std::size_t>(j) * ns + i;
        g.K[idx] = curvature_at(ev, cols[j], ss[i], g.singular[idx]);
      }
  } else {
#pragma omp parallel for collapse(2) schedule(static)
    for (int j = 0; j < nt; ++j)
      for (int i = 0; i < ns; ++i) {
        std::size_t idx = static_cast<std::size_t>(j) * ns + i;
        g.K[idx] = curvature_at(ev, cols[j], ss[i], g.singular[idx]);
      }
  }

  bool first = true;
  for (int j = 0; j < nt; ++j)
    for (int i = 0; i < ns; ++i) {
      std::size_t idx = static_cast<std::size_t>(j) * ns + i;
      if (g.singular[idx]) continue;
      ++g.regular;
      double k = g.K[idx];
      if (first || k < g.k_min) {
        g.k_min = k;
        g.s_at_min = g.s[i];
        g.t_at_min = g.t[j];
      }
      if (first || k > g.k_max) {
        g.k_max = k;
        g.s_at_max = g.s[i];
        g.t_at_max = g.t[j];
      }
      g.abs_max = std::max(g.abs_max, std::abs(k));
      first = false;
    }
  return g;
}

Mesh sample_mesh(const SweepSurface& S, int ns, int nt, bool with_curvature, Exec exec) {
  check_grid(ns, nt);
  return sample_mesh(SurfaceEvaluator(S), ns, nt, with_curvature, exec);
}

Mesh sample_mesh(const SurfaceEvaluator& ev, int ns, int nt, bool with_curvature, Exec exec) {
  check_grid(ns, nt);
  const SweepSurface& S = ev.surface();
  std::vector<Real> ss = grid_params(S.profile.s0(), S.profile.s1(), ns);
  std::vector<Real> ts = grid_params(S.t0, S.t1, nt);
  auto cols = columns(ev, ts, exec);

  Mesh m;
  m.ns = ns;
  m.nt = nt;
  for (const auto& x : ss) m.s.push_back(x.convert_to<double>());
  for (const auto& x : ts) m.t.push_back(x.convert_to<double>());
  const std::size_t nv = static_cast<std::size_t>(ns) * nt;
  m.vertices.resize(nv);
  m.singular.assign(nv, 0);
  std::vector<double> K(with_curvature ? nv : 0);

  auto fill = [&](int j, int i) {
    std::size_t idx = static_cast<std::size_t>(j) * ns + i;
    curves::RealVec p = ev.point(cols[j], ss[i]);
    m.vertices[idx] = {p[0].convert_to<double>(), p[1].convert_to<double>(), p[2].convert_to<double>()};
    if (with_curvature) K[idx] = curvature_at(ev, cols[j], ss[i], m.singular[idx]);
  };
  if (exec == Exec::Serial) {
    for (int j = 0; j < nt; ++j)
      for (int i = 0; i < ns; ++i) fill(j, i);
  } else {
#pragma omp parallel for collapse(2) schedule(static)
    for (int j = 0; j < nt; ++j)
      for (int i = 0; i < ns; ++i) fill(j, i);
  }
  if (with_curvature) m.K = std::move(K);

  for (int j = 0; j + 1 < nt; ++j)
    for (int i = 0; i + 1 < ns; ++i) {
      std::size_t a = static_cast<std::size_t>(j) * ns + i;
      std::array<std::size_t, 4> q{a, a + 1, a + ns + 1, a + ns};
      m.quads.push_back(q);
      int distinct = 0;
      for (int u = 0; u < 4; ++u) {
        bool seen = false;
        for (int v = 0; v < u; ++v) {
          const auto& p = m.vertices[q[u]];
          const auto& r = m.vertices[q[v]];
          double d = std::abs(p[0] - r[0]) + std::abs(p[1] - r[1]) + std::abs(p[2] - r[2]);
          double scale = 1 + std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]);
          if (d <= 1e-13 * scale) seen = true;
        }
        if (!seen) ++distinct;
      }
      m.degenerate_quads.push_back(distinct < 4 ? 1 : 0);
    }
  return m;
}

std::string to_obj(const Mesh& m) {
  std::ostringstream os;
  os << "# helixforge sweep mesh " << m.ns << " x " << m.nt << " (s fastest, t slowest)\n";
  for (const auto& v : m.vertices)
    os << "v " << io::format17(v[0]) << ' ' << io::format17(v[1]) << ' ' << io::format17(v[2]) << '\n';
  for (const auto& q : m.quads) os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
  return os.str();
}

std::string curvature_csv(const Mesh& m) {
  std::ostringstream os;
  os << "s,t,K\n";
  for (int j = 0; j < m.nt; ++j)
    for (int i = 0; i < m.ns; ++i) {
      std::size_t idx = static_cast<std::size_t>(j) * m.ns + i;
      os << io::format17(m.s[i]) << ',' << io::format17(m.t[j]) << ',';
      if (m.K && !m.singular[idx])
        os << io::format17((*m.K)[idx]);
      else
        os << "nan";
      os << '\n';
    }
  return os.str();
}

void write_obj(const Mesh& m, const std::filesystem::path& path) { io::write_atomic(path, to_obj(m)); }

void write_curvature_csv(const Mesh& m, const std::filesystem::path& path) {
  io::write_atomic(path, curvature_csv(m));
}

}  // namespace helixforge::surface
