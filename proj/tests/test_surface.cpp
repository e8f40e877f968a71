#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "helixforge/surface/surface.hpp"

using namespace helixforge;
using namespace helixforge::surface;
using namespace helixforge::testing;

namespace {

helix::RationalHelix example4() { return helix::helix_from_a3(example4_a3(), example4_tangent()); }

const rmf::ApproxRMF& frame33() {
  static const rmf::RmfApproximation approx = rmf::approximate_rmf(example4(), 3, 3);
  return approx.pieces.at(0).frame;
}

ProfileCurve example5_profile() { return ProfileCurve::line(Rational(-1, 5), 5, 10, Rational(-1, 2)); }

RVF3 constant(long x, long y, long z) { return RVF3(RatFun(x), RatFun(y), RatFun(z)); }

// Unit circle of radius 1 in the (f2, f3) plane, rational in s.
ProfileCurve unit_circle() {
  RatFun den(poly({1, 0, 1}));
  return ProfileCurve::rational(RatFun(poly({1, 0, -1})) / den, RatFun(poly({0, 2})) / den, -1, 1);
}

// Exact rotation from the quaternion (1, 1, 1, 1)/2 composed with (1,2,2)/3-type entries.
std::array<std::array<Rational, 3>, 3> rotation() {
  return {{{Rational(1, 3), Rational(-2, 3), Rational(2, 3)},
           {Rational(2, 3), Rational(-1, 3), Rational(-2, 3)},
           {Rational(2, 3), Rational(2, 3), Rational(1, 3)}}};
}

RVF3 rotate(const RVF3& v, bool translate) {
  auto R = rotation();
  RatFun c[3];
  for (int i = 0; i < 3; ++i) {
    c[i] = RatFun(0);
    for (int j = 0; j < 3; ++j) c[i] = c[i] + RatFun(SurdScalar(R[i][j])) * v[j];
    if (translate) c[i] = c[i] + RatFun(SurdScalar(Rational(i + 1, 7)));
  }
  return RVF3(c[0], c[1], c[2]);
}

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / (1 + abs(a) + abs(b)); }

}  // namespace

TEST_CASE("profile construction") {
  SUBCASE("line") {
    ProfileCurve p = example5_profile();
    CHECK(p.kind() == ProfileKind::Line);
    CHECK(p.pieces() == 1);
    CHECK(p.c1()(SurdScalar(0)) == SurdScalar(5));
    CHECK(p.c2()(SurdScalar(1)) == SurdScalar(Rational(19, 2)));
    CHECK(p.c1().num().degree() == 1);
  }
  SUBCASE("polyline") {
    ProfileCurve p = ProfileCurve::polyline({{0, 0}, {1, 2}, {3, 2}}, 0, 1);
    CHECK(p.pieces() == 2);
    CHECK(p.piece_at(0.25) == 0);
    CHECK(p.piece_at(0.5) == 1);
    CHECK(p.piece_at(1.0) == 1);
    CHECK(p.c1(0)(SurdScalar(Rational(1, 2))) == SurdScalar(1));
    CHECK(p.c1(1)(SurdScalar(Rational(1, 2))) == SurdScalar(1));
    CHECK(p.c2(1)(SurdScalar(1)) == SurdScalar(2));
    CHECK_THROWS(ProfileCurve::polyline({{0, 0}}));
  }
  SUBCASE("rational Bezier quarter circle") {
    ProfileCurve p = ProfileCurve::rational_bezier({{{1, 0}}, {{1, 1}}, {{0, 1}}}, {1, 1, 2}, 0, 1);
    // Weights (1, 1, 2) on this control polygon give w = 1 + u^2 and the unit circle.
    for (int i = 0; i <= 8; ++i) {
      SurdScalar s(Rational(i, 8));
      SurdScalar x = p.c1()(s), y = p.c2()(s);
      CHECK(x * x + y * y == SurdScalar(1));
    }
    CHECK(p.c1()(SurdScalar(Rational(1, 2))) == SurdScalar(Rational(3, 5)));
    ProfileCurve shifted = ProfileCurve::rational_bezier({{{1, 0}}, {{1, 1}}, {{0, 1}}}, {1, 1, 2}, 2, 4);
    CHECK(shifted.c2()(SurdScalar(3)) == SurdScalar(Rational(4, 5)));
    CHECK_THROWS_AS(ProfileCurve::rational_bezier({{{1, 0}}, {{0, 1}}}, {1, -1}), Error);
  }
  SUBCASE("empty domain") { CHECK_THROWS_AS(ProfileCurve::line(1, 0, 0, 1, 1, 1), Error); }
}

TEST_CASE("zero profile reproduces the spine") {
  helix::RationalHelix h = example4();
  SweepSurface S = sweep(h, frame33(), ProfileCurve::line(0, 0, 0, 0));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      SurdScalar s(Rational(i, 4)), t(Rational(j, 4));
      CHECK(evaluate(S, s, t) == h.r(t));
    }
  Mesh m = sample_mesh(S, 2, 2, false);
  CHECK(m.vertices.size() == 4);
  CHECK(m.quads.size() == 1);
  CHECK(m.degenerate_quads.at(0) == 1);
  CHECK(!m.K);
  for (int j = 0; j < 2; ++j) {
    auto r = h.r.evaluate(Real(j));
    for (int i = 0; i < 2; ++i)
      for (int c = 0; c < 3; ++c) CHECK(m.vertices[j * 2 + i][c] == doctest::Approx(r[c].convert_to<double>()));
  }
}

TEST_CASE("plane and cylinder") {
  SUBCASE("plane: line profile along a straight spine") {
    RVF3 spine(RatFun(poly({0, 2})), RatFun(poly({1, 1})), RatFun(poly({0, -1})));
    SweepSurface S = sweep(spine, constant(0, 0, 1), constant(1, 0, 0), ProfileCurve::line(3, 1, -2, 5));
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j) {
        SurdScalar s(Rational(i, 5)), t(Rational(j, 5));
        CHECK(gauss_curvature_exact(S, s, t).is_zero());
        Forms<SurdScalar> f = forms_exact(S, s, t);
        CHECK((f.L.is_zero() && f.M.is_zero() && f.N.is_zero()));
      }
    SurfaceEvaluator ev(S);
    CHECK(abs(ev.gauss_curvature(Real("0.3"), Real("0.7"))) < Real("1e-30"));
  }
  SUBCASE("cylinder of radius one") {
    RVF3 spine(RatFun(0), RatFun(0), RatFun(poly({0, 1})));
    SweepSurface S = sweep(spine, constant(1, 0, 0), constant(0, 1, 0), unit_circle());
    SurfaceEvaluator ev(S);
    for (int i = -4; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        SurdScalar s(Rational(i, 4)), t(Rational(j, 4));
        CHECK(gauss_curvature_exact(S, s, t).is_zero());
        Real sr = s.to_real(), tr = t.to_real();
        CHECK(abs(ev.gauss_curvature(sr, tr)) < Real("1e-30"));
        // Closed form for a unit-radius cylinder: |H| = 1/2.
        CHECK(abs(abs(ev.mean_curvature(sr, tr)) - Real(0.5)) < Real("1e-40"));
        auto p = ev.point(sr, tr);
        CHECK(abs(p[0] * p[0] + p[1] * p[1] - 1) < Real("1e-45"));
      }
  }
  SUBCASE("sphere-like swept circle has positive curvature") {
    // Circle profile of radius 1 swept along a circle-free straight spine with a
    // rotating frame is still a cylinder; a curved profile on a line spine with
    // constant frame gives a cylinder over the profile. Curvature is zero both ways,
    // so a torus-like check uses a parabolic spine in the profile plane.
    RVF3 spine(RatFun(poly({0, 0, 1})), RatFun(0), RatFun(0));
    SweepSurface S = sweep(spine, constant(0, 1, 0), constant(0, 0, 1), unit_circle());
    CHECK(gauss_curvature_exact(S, SurdScalar(0), SurdScalar(Rational(1, 2))).is_zero());
  }
}

TEST_CASE("surface points lie in the normal plane of the spine") {
  helix::RationalHelix h = example4();
  SweepSurface S = sweep(h, frame33(), example5_profile());
  SurfaceEvaluator ev(S);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      Real s = Real(i) / 6, t = Real(j) / 6;
      auto col = ev.column(t);
      auto p = ev.point(col, s);
      curves::RealVec d{p[0] - col.r[0][0], p[1] - col.r[0][1], p[2] - col.r[0][2]};
      curves::RealVec f2{col.f2[0][0], col.f2[0][1], col.f2[0][2]};
      curves::RealVec f3{col.f3[0][0], col.f3[0][1], col.f3[0][2]};
      Real a = curves::dot(d, f2), b = curves::dot(d, f3);
      curves::RealVec res{d[0] - a * f2[0] - b * f3[0], d[1] - a * f2[1] - b * f3[1], d[2] - a * f2[2] - b * f3[2]};
      CHECK(curves::norm(res) < Real("1e-24"));
    }
}

TEST_CASE("fundamental forms are invariant under rigid motions") {
  helix::RationalHelix h = example4();
  const rmf::ApproxRMF& fr = frame33();
  SweepSurface S = sweep(h.r, fr.f2, fr.f3, example5_profile());
  SweepSurface T = sweep(rotate(h.r, true), rotate(fr.f2, false), rotate(fr.f3, false), example5_profile());
  SurfaceEvaluator a(S), b(T);
  for (double s : {0.0, 0.37, 1.0})
    for (double t : {0.0, 0.5, 0.91}) {
      Forms<Real> x = a.forms(a.column(Real(t)), Real(s));
      Forms<Real> y = b.forms(b.column(Real(t)), Real(s));
      CHECK(rel_diff(x.E, y.E) < Real("1e-20"));
      CHECK(rel_diff(x.F, y.F) < Real("1e-20"));
      CHECK(rel_diff(x.G, y.G) < Real("1e-20"));
      CHECK(rel_diff(x.L, y.L) < Real("1e-20"));
      CHECK(rel_diff(x.M, y.M) < Real("1e-20"));
      CHECK(rel_diff(x.N, y.N) < Real("1e-20"));
      CHECK(abs(x.K() - y.K()) < Real("1e-20"));
    }
  // The exact forms agree with the numeric evaluator.
  Forms<SurdScalar> e = forms_exact(S, SurdScalar(Rational(1, 3)), SurdScalar(Rational(1, 2)));
  Forms<Real> n = a.forms(a.column(Real(1) / 2), Real(1) / 3);
  CHECK(rel_diff(e.E.to_real(), n.E) < Real("1e-40"));
  CHECK(rel_diff(e.N.to_real(), n.N) < Real("1e-40"));
  CHECK(abs(e.K().to_real() - n.K()) < Real("1e-40"));
}

namespace {

// Line-profile sweep in frame coordinates. With f2' = a2 t + w f3 and f3' = a3 t - w f2,
// S_t = g t + w (c1 f3 - c2 f2) where g = sigma + c1 a2 + c2 a3, and L = 0, so
// K = -M^2 / |n|^4 with
//   M   = w [(c1' a2 + c2' a3)(c.c') - g |c'|^2],
//   |n|^2 = g^2 |c'|^2 + w^2 (c.c')^2.
struct FrameCoordinates {
  Real g, w, K;
};

FrameCoordinates line_sweep_oracle(const helix::RationalHelix& h, const rmf::ApproxRMF& fr, const Real& c1d,
                                   const Real& c1, const Real& c2d, const Real& c2, const Real& t) {
  curves::RealVec tt = h.t.evaluate(t), f2 = fr.f2.evaluate(t), f3 = fr.f3.evaluate(t);
  curves::RealVec f2d = fr.f2.derivative().evaluate(t), f3d = fr.f3.derivative().evaluate(t);
  Real sigma = h.sigma.evaluate(t);
  Real a2 = curves::dot(f2d, tt), a3 = curves::dot(f3d, tt), w = curves::dot(f2d, f3);
  Real g = sigma + c1 * a2 + c2 * a3;
  Real cc = c1 * c1d + c2 * c2d, dd = c1d * c1d + c2d * c2d;
  Real M = w * ((c1d * a2 + c2d * a3) * cc - g * dd);
  Real n2 = g * g * dd + w * w * cc * cc;
  return {g, w, -M * M / (n2 * n2)};
}

}  // namespace

TEST_CASE("line-profile curvature matches the frame-coordinate oracle") {
  helix::RationalHelix h = example4();
  const rmf::ApproxRMF& fr = frame33();
  SweepSurface S1 = sweep(h, fr, example5_profile());
  SurfaceEvaluator ev(S1);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      Real s = Real(i) / 8, t = Real(j) / 8;
      Real c1 = 5 - s / 5, c2 = 10 * s - Real(1) / 2;
      FrameCoordinates o = line_sweep_oracle(h, fr, Real(-1) / 5, c1, Real(10), c2, t);
      Forms<Real> f = ev.forms(ev.column(t), s);
      CHECK(abs(f.L) < Real("1e-40"));
      CHECK(abs(f.K() - o.K) <= Real("1e-30") * (1 + abs(o.K)));
    }
}

TEST_CASE("developable sweep with the rational frame") {
  helix::RationalHelix h = example4();
  SweepSurface S1 = sweep(h, frame33(), example5_profile());
  CurvatureGrid g = curvature_grid(S1, 100, 100);
  CHECK(g.regular == 100 * 100);
  // L vanishes for a line profile, so K = -M^2/(EG - F^2)^2 is never positive.
  CHECK(g.k_max <= 0);
  MESSAGE("S1: K min " << g.k_min << " at (s=" << g.s_at_min << ", t=" << g.t_at_min << "), K max " << g.k_max
                       << " at (s=" << g.s_at_max << ", t=" << g.t_at_max << ")");

  // Away from the edge of regression the surface is flat to the frame's accuracy.
  std::vector<double> mags;
  for (double k : g.K) mags.push_back(std::abs(k));
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  double median = mags[mags.size() / 2];
  CHECK(median < 1e-9);

  // The peak sits where the ruling speed g nearly vanishes.
  FrameCoordinates peak = line_sweep_oracle(h, frame33(), Real(-1) / 5, 5 - Real(g.s_at_min) / 5, Real(10),
                                            10 * Real(g.s_at_min) - Real(1) / 2, Real(g.t_at_min));
  FrameCoordinates calm = line_sweep_oracle(h, frame33(), Real(-1) / 5, Real(5), Real(10), Real(-1) / 2, Real(0));
  CHECK(abs(peak.g) < abs(calm.g) / 100);

  // With the Frenet-aligned basis the same profile is far from developable.
  CurvatureGrid g2 = curvature_grid(sweep_fsf(h, example5_profile()), 20, 20);
  std::vector<double> mags2;
  for (double k : g2.K) mags2.push_back(std::abs(k));
  std::nth_element(mags2.begin(), mags2.begin() + mags2.size() / 2, mags2.end());
  CHECK(mags2[mags2.size() / 2] > 1e3 * median);
  MESSAGE("S2: K min " << g2.k_min << ", K max " << g2.k_max);

  // Coarser frames are measurably less developable at a point far from the edge.
  rmf::RmfApproximation a11 = rmf::approximate_rmf(h, 1, 1);
  SurfaceEvaluator e33(S1), e11(sweep(h, a11.pieces.at(0), example5_profile()));
  Real s(1), t("0.7");
  CHECK(abs(e11.gauss_curvature(s, t)) > abs(e33.gauss_curvature(s, t)));
}

TEST_CASE("exact rational rotation-minimizing sweeps are flat") {
  // A planar spine has an exact RMF: the in-plane normal and the plane normal.
  // Tschirnhausen cubic r = (t - t^3/3, t^2, 0): r' = (1 - t^2, 2t, 0), |r'| = 1 + t^2.
  RVF3 r(RatFun(rpoly({0, 1, 0, Rational(-1, 3)})), RatFun(poly({0, 0, 1})), RatFun(0));
  RatFun den(poly({1, 0, 1}));
  RVF3 f2(RatFun(poly({0, -2})) / den, RatFun(poly({1, 0, -1})) / den, RatFun(0));
  RVF3 f3 = constant(0, 0, 1);
  SweepSurface S = sweep(r, f2, f3, example5_profile());
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      SurdScalar s(Rational(i, 4)), t(Rational(j, 4));
      try {
        CHECK(gauss_curvature_exact(S, s, t).is_zero());
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularPoint);
      }
    }
  CurvatureGrid g = curvature_grid(S, 25, 25);
  CHECK(g.regular > 0);
  for (std::size_t k = 0; k < g.K.size(); ++k)
    if (!g.singular[k]) CHECK(std::abs(g.K[k]) < 1e-30);
}

TEST_CASE("serial and parallel grids agree") {
  helix::RationalHelix h = example4();
  SweepSurface S = sweep(h, frame33(), example5_profile());
  CurvatureGrid a = curvature_grid(S, 17, 13, Exec::Serial);
  CurvatureGrid b = curvature_grid(S, 17, 13, Exec::Parallel);
  CHECK(a.K == b.K);
  CHECK(a.singular == b.singular);
  CHECK(a.k_min == b.k_min);
  CHECK(a.t_at_max == b.t_at_max);
  Mesh ma = sample_mesh(S, 9, 7, true, Exec::Serial);
  Mesh mb = sample_mesh(S, 9, 7, true, Exec::Parallel);
  CHECK(ma.vertices == mb.vertices);
  CHECK(*ma.K == *mb.K);
  CHECK(to_obj(ma) == to_obj(mb));
}

TEST_CASE("mesh sampling and export") {
  helix::RationalHelix h = example4();
  SweepSurface S1 = sweep(h, frame33(), example5_profile());
  Mesh m = sample_mesh(S1, 50, 50, false);
  CHECK(m.vertices.size() == 2500);
  CHECK(m.quads.size() == 2401);
  CHECK(m.quads[0] == std::array<std::size_t, 4>{0, 1, 51, 50});
  CHECK(m.quads.back() == std::array<std::size_t, 4>{2448, 2449, 2499, 2498});
  CHECK_THROWS_AS(sample_mesh(S1, 1, 5), Error);

  SUBCASE("frames differ, spine row shared") {
    ProfileCurve through_origin = ProfileCurve::line(1, 0, 2, 0);
    Mesh a = sample_mesh(sweep(h, frame33(), through_origin), 5, 5, false);
    Mesh b = sample_mesh(sweep_fsf(h, through_origin), 5, 5, false);
    CHECK(to_obj(a) != to_obj(b));
    for (int j = 0; j < 5; ++j)
      for (int c = 0; c < 3; ++c) CHECK(a.vertices[j * 5][c] == doctest::Approx(b.vertices[j * 5][c]).epsilon(1e-15));
    double far = 0;
    for (std::size_t k = 0; k < a.vertices.size(); ++k) far = std::max(far, std::abs(a.vertices[k][0] - b.vertices[k][0]));
    CHECK(far > 1e-3);
  }

  SUBCASE("OBJ and CSV text") {
    Mesh small = sample_mesh(S1, 3, 2, true);
    std::string obj = to_obj(small);
    std::istringstream in(obj);
    std::string line;
    int v = 0, f = 0;
    while (std::getline(in, line)) {
      if (line.rfind("v ", 0) == 0) {
        ++v;
        std::istringstream ls(line.substr(2));
        double x, y, z;
        CHECK(static_cast<bool>(ls >> x >> y >> z));
      } else if (line.rfind("f ", 0) == 0) {
        ++f;
      }
    }
    CHECK(v == 6);
    CHECK(f == 2);
    CHECK(obj.find("f 1 2 5 4\n") != std::string::npos);
    // 17 significant digits round-trip exactly.
    std::istringstream first(obj.substr(obj.find("\nv ") + 3));
    double x;
    first >> x;
    CHECK(x == small.vertices[0][0]);

    std::string csv = curvature_csv(small);
    CHECK(csv.rfind("s,t,K\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

    auto dir = std::filesystem::temp_directory_path() / "helixforge_surface_test";
    std::filesystem::remove_all(dir);
    write_obj(small, dir / "mesh.obj");
    write_curvature_csv(small, dir / "mesh.csv");
    std::ifstream fo(dir / "mesh.obj");
    std::stringstream buf;
    buf << fo.rdbuf();
    CHECK(buf.str() == obj);
    int files = 0;
    for ([[maybe_unused]] auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 2);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("domain checks") {
  helix::RationalHelix h = example4();
  rmf::RmfApproximation wide = rmf::approximate_rmf(h, 2, 2, 0, {}, 0, 1);
  CHECK_THROWS_AS(sweep(h, wide.pieces.at(0), example5_profile(), 0, 2), Error);
  SurfaceEvaluator ev(sweep(h, frame33(), example5_profile()));
  CHECK_THROWS_AS(ev.point(Real(0.5), Real(1.5)), Error);
  CHECK_THROWS_AS(ev.point(Real(-0.5), Real(0.5)), Error);
}
