// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here.
//
// Usage: acceptance [--expect-fail 4,6,8]
// Exit status is 0 when every failing criterion is in the expected set.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "helixforge/curves/invariants.hpp"
#include "helixforge/hermite/hermite.hpp"
#include "helixforge/rmf/angle.hpp"
#include "helixforge/rmf/frame.hpp"
#include "helixforge/surface/surface.hpp"

using namespace helixforge;
using namespace helixforge::testing;
using curves::cross;
using curves::dot;

namespace {

constexpr double kC1Seconds = 1.0;
constexpr int kC2Instances = 50;
constexpr double kC2Seconds = 30.0;
constexpr int kC3MaxDegree = 9;
const Real kC3Spread("1e-20");
constexpr int kC5Pairs = 20;
constexpr double kC5SecondsEach = 1.0;
constexpr double kC6Eps = 5e-6;
constexpr std::size_t kC6Alternations = 8;
constexpr double kC6Seconds = 5.0;
constexpr double kC7RmfError = 1e-3;
constexpr int kC7Samples = 2001;
constexpr int kC8Grid = 100;
constexpr double kC8K = 1e-9;
const Real kC8Sanity("1e-30");
constexpr int kC9RingCases = 500;
constexpr int kC9Helices = 20;
constexpr double kC9AngleResidual = 1e-10;
constexpr int kC9AnglePoints = 33;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

helix::RationalHelix example4() { return helix::helix_from_a3(example4_a3(), example4_tangent()); }

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  helix::RationalHelix h = helix::helix_from_a3(example2_a3(), example2_tangent());
  bool exact = h.r == example2_curve();
  bool zero_residual = (h.r - example2_curve()).is_zero();
  double s = seconds_since(t0);
  std::ostringstream d;
  d << "exact match " << (exact ? "yes" : "no") << ", residual " << (zero_residual ? "0" : "nonzero") << ", " << s
    << " s";
  return {exact && zero_residual && s < kC1Seconds, d.str()};
}

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2);
  int agree = 0, total = 0;
  while (total < kC2Instances) {
    auto inst = random_ph_instance(rng);
    if (!inst) continue;
    ++total;
    curves::PHCurve c = curves::ph_curve_from_tangent(inst->a3, inst->v);
    RVF3 w = cross(inst->v, inst->v.derivative());
    if (c.r == curves::farouki_sir_oracle(inst->a3 * dot(w, w), inst->v)) ++agree;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << total << " exact agreements, " << s << " s";
  return {agree == total && s < kC2Seconds, d.str()};
}

Outcome criterion3() {
  helix::RationalHelix h = helix::helix_from_a3(example1_a3(), example1_tangent());
  int maxdeg = 0;
  for (int d : h.r.component_degrees()) maxdeg = std::max(maxdeg, d);
  helix::HelixReport rep = helix::helix_verify(h.r);
  bool ratio = rep.is_helix && (rep.exact || rep.max_spread < kC3Spread);
  std::ostringstream d;
  d << "component degree " << maxdeg << ", tau/kappa " << rep.tau_over_kappa.convert_to<double>() << " ("
    << (rep.exact ? "exact identity" : "sampled") << ")";
  return {maxdeg <= kC3MaxDegree && ratio, d.str()};
}

Outcome criterion4() {
  hermite::HermiteData data;
  data.p0 = {SurdScalar(0), SurdScalar(0), SurdScalar(0)};
  data.p1 = {SurdScalar(0), SurdScalar(1), SurdScalar(-1)};
  data.t0 = {1, 0, 0};
  data.t1 = {Rational(1, 3), Rational(-2, 3), Rational(2, 3)};
  hermite::HermiteSolution s = hermite::interpolate(data);
  const auto& b = s.bezier;
  bool cs = b.c[0].is_zero() && b.c[1].is_zero() && b.c[2].is_zero() && b.c[3] == SurdScalar(Rational(-1, 3));
  bool w1 = b.w1 == SurdScalar(Rational(4, 9));
  bool w2 = b.w2 == SurdScalar(Rational(4, 9));
  bool residual = s.position_residual0 == 0 && s.position_residual1 == 0;
  std::ostringstream d;
  d << "c = (" << b.c[0] << ", " << b.c[1] << ", " << b.c[2] << ", " << b.c[3] << "), w1 = " << b.w1
    << ", w2 = " << b.w2 << " (required 4/9), endpoint residuals " << s.position_residual0.convert_to<double>()
    << ", " << s.position_residual1.convert_to<double>();
  return {cs && w1 && w2 && residual, d.str()};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  int infeasible = 0;
  double slowest = 0;
  for (int i = 0; i < kC5Pairs; ++i) {
    Rational m, n;
    do {
      m = Rational(num(rng), den(rng));
      n = Rational(num(rng), den(rng));
    } while (m == 0 || n == 0);
    auto t0 = std::chrono::steady_clock::now();
    helix::RrmfSearchResult r = helix::rrmf_degree2_search(m, n, 1);
    slowest = std::max(slowest, seconds_since(t0));
    if (!r.feasible) ++infeasible;
  }
  std::ostringstream d;
  d << infeasible << "/" << kC5Pairs << " infeasible, slowest run " << slowest << " s";
  return {infeasible == kC5Pairs && slowest < kC5SecondsEach, d.str()};
}

Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  auto target = [](double t) { return 1 / (2 - 2 * t + 2 * t * t); };
  rmf::MinimaxResult r = rmf::minimax_rational(target, 0, 1, 3, 3);
  double s = seconds_since(t0);
  std::ostringstream d;
  d << "eps " << r.eps << ", " << r.alternations() << " alternation points"
    << (r.representable ? " (target is exactly representable in (3,3))" : "") << ", " << s << " s";
  return {r.eps <= kC6Eps && r.alternations() >= kC6Alternations && s < kC6Seconds, d.str()};
}

bool orthonormal(const rmf::ApproxRMF& f) {
  const RVF3* v[3] = {&f.f1, &f.f2, &f.f3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(dot(*v[i], *v[j]) == RatFun(i == j ? 1 : 0))) return false;
  return true;
}

Outcome criterion7() {
  helix::RationalHelix h = example4();
  rmf::RmfApproximation a33 = rmf::approximate_rmf(h, 3, 3);
  rmf::RmfApproximation a11 = rmf::approximate_rmf(h, 1, 1);
  if (a33.pieces.size() != 1 || a11.pieces.size() != 1) return {false, "unexpected interval split"};
  const rmf::ApproxRMF& f = a33.pieces[0].frame;
  bool ortho = orthonormal(f);
  double e33 = rmf::rmf_condition_error(f, 0, 1, kC7Samples);
  double e11 = rmf::rmf_condition_error(a11.pieces[0].frame, 0, 1, kC7Samples);
  std::ostringstream d;
  d << "orthonormal " << (ortho ? "exactly" : "NO") << ", max|f2'.f3| (3,3) " << e33 << ", (1,1) " << e11;
  return {ortho && e33 < kC7RmfError && e33 < e11, d.str()};
}

Outcome criterion8() {
  using namespace surface;
  helix::RationalHelix h = example4();
  rmf::RmfApproximation a = rmf::approximate_rmf(h, 3, 3);
  ProfileCurve line = ProfileCurve::line(Rational(-1, 5), 5, 10, Rational(-1, 2));
  CurvatureGrid g = curvature_grid(sweep(h, a.pieces.at(0), line), kC8Grid, kC8Grid);
  int above = 0;
  for (std::size_t k = 0; k < g.K.size(); ++k)
    if (!g.singular[k] && std::abs(g.K[k]) >= kC8K) ++above;

  // Sanity surfaces: a plane and a unit cylinder, exact and at working precision.
  auto constant = [](long x, long y, long z) { return RVF3(RatFun(x), RatFun(y), RatFun(z)); };
  SweepSurface plane = sweep(RVF3(RatFun(poly({0, 2})), RatFun(poly({1, 1})), RatFun(poly({0, -1}))),
                             constant(0, 0, 1), constant(1, 0, 0), ProfileCurve::line(3, 1, -2, 5));
  RatFun den(poly({1, 0, 1}));
  SweepSurface cylinder =
      sweep(RVF3(RatFun(0), RatFun(0), RatFun(poly({0, 1}))), constant(1, 0, 0), constant(0, 1, 0),
            ProfileCurve::rational(RatFun(poly({1, 0, -1})) / den, RatFun(poly({0, 2})) / den, -1, 1));
  bool sanity = true;
  for (const SweepSurface* S : {&plane, &cylinder}) {
    SurfaceEvaluator ev(*S);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        Rational s = S->profile.s0() + (S->profile.s1() - S->profile.s0()) * Rational(i, 4);
        Rational t(j, 4);
        sanity &= gauss_curvature_exact(*S, SurdScalar(s), SurdScalar(t)).is_zero();
        sanity &= abs(ev.gauss_curvature(to_real(s), to_real(t))) < kC8Sanity;
      }
  }
  std::ostringstream d;
  d << "S1 " << kC8Grid << "x" << kC8Grid << ": " << g.regular << " regular points, |K|max " << g.abs_max
    << " at (s=" << g.s_at_min << ", t=" << g.t_at_min << "), " << above << " points with |K| >= " << kC8K
    << "; plane/cylinder K = 0 " << (sanity ? "yes" : "NO");
  return {g.abs_max < kC8K && sanity, d.str()};
}

Outcome criterion9() {
  std::ostringstream d;
  bool ok = true;

  // Ring axioms and the derivative rules over Q and Q(sqrt 13).
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coef(-10, 10), deg(0, 5);
  auto rpoly_rand = [&](std::int64_t e, bool nonzero) {
    for (;;) {
      std::vector<SurdScalar> c;
      int n = static_cast<int>(deg(rng));
      for (int i = 0; i <= n; ++i)
        c.push_back(e ? SurdScalar(Rational(coef(rng)), Rational(coef(rng)), e) : SurdScalar(coef(rng)));
      Polynomial p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  int ring_bad = 0;
  for (int i = 0; i < kC9RingCases; ++i) {
    std::int64_t e = i % 2 ? 13 : 0;
    RatFun x(rpoly_rand(e, false), rpoly_rand(e, true)), y(rpoly_rand(e, false), rpoly_rand(e, true)),
        z(rpoly_rand(e, false), rpoly_rand(e, true));
    bool good = x + y == y + x && x * y == y * x && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
                (x + y) - y == x && (x * y).derivative() == x.derivative() * y + x * y.derivative();
    if (!y.is_zero()) good &= (x * y) / y == x;
    if (!good) ++ring_bad;
  }
  ok &= ring_bad == 0;
  d << "ring " << kC9RingCases - ring_bad << "/" << kC9RingCases;

  int unit_bad = 0;
  for (int i = 0; i < 30; ++i) {
    RatFun b1(poly({coef(rng), coef(rng), i % 2 ? coef(rng) : 0})), b2(poly({coef(rng), coef(rng) | 1}));
    RVF3 u = curves::stereographic_tangent(b1, b2);
    if (!(dot(u, u) == RatFun(1))) ++unit_bad;
  }
  ok &= unit_bad == 0;
  d << "; unit norm " << 30 - unit_bad << "/30";

  int helix_bad = 0, roundtrip_bad = 0, helices = 0;
  std::mt19937_64 hr(99);
  while (helices < kC9Helices) {
    auto h = random_helix(hr);
    if (!h) continue;
    ++helices;
    bool good = h->r.derivative() == h->sigma * h->t;
    const RVF3* w[3] = {&h->basis.w1, &h->basis.w2, &h->basis.w3};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) good &= dot(*w[i], *w[j]) == RatFun(i == j ? 1 : 0);
    if (!good) ++helix_bad;
    auto ph = curves::ph_curve_from_tangent(h->a3, h->t);
    if (!(curves::a3_recover(ph.r, h->t).a3 == h->a3)) ++roundtrip_bad;
  }
  ok &= helix_bad == 0 && roundtrip_bad == 0;
  d << "; helix identities " << kC9Helices - helix_bad << "/" << kC9Helices << "; a3 round trip "
    << kC9Helices - roundtrip_bad << "/" << kC9Helices;

  helix::RationalHelix h = example4();
  rmf::AngleFunction th = rmf::theta(h);
  double worst = 0;
  const double step = 1e-3;
  for (int i = 1; i <= kC9AnglePoints; ++i) {
    double t = static_cast<double>(i) / (kC9AnglePoints + 1);
    double deriv = (th(t - 2 * step) - 8 * th(t - step) + 8 * th(t + step) - th(t + 2 * step)) / (12 * step);
    double ts = h.tau_sigma.evaluate(Real(t)).convert_to<double>();
    worst = std::max(worst, std::abs(deriv + ts));
  }
  ok &= worst < kC9AngleResidual;
  d << "; max |theta' + tau sigma| " << worst;
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) expected.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail 4,6,8]\n", argv[0]);
      return 2;
    }
  }
  set_working_precision(50);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"construct exactness", criterion1},     {"oracle equivalence", criterion2},
      {"helix degree and ratio", criterion3},  {"Hermite interpolation", criterion4},
      {"quadratic RRMF nonexistence", criterion5}, {"minimax (3,3)", criterion6},
      {"rational frame quality", criterion7},  {"sweep developability", criterion8},
      {"property suites", criterion9},
  };
  std::set<int> failed;
  for (int i = 0; i < 9; ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(i + 1);
    std::printf("criterion %d %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  bool unexpected = false;
  for (int f : failed)
    if (!expected.count(f)) unexpected = true;
  if (!expected.empty()) {
    for (int e : expected)
      if (!failed.count(e)) std::printf("note: criterion %d was expected to fail but passed\n", e);
  }
  return unexpected ? 1 : 0;
}
