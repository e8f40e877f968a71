#include "helixforge/cli/jobs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "helixforge/curves/invariants.hpp"
#include "helixforge/field/sturm.hpp"
#include "helixforge/helix/helix.hpp"
#include "helixforge/hermite/hermite.hpp"
#include "helixforge/io/atomic_write.hpp"
#include "helixforge/rmf/angle.hpp"
#include "helixforge/rmf/frame.hpp"
#include "helixforge/surface/surface.hpp"

namespace helixforge::cli {

using curves::RVF3;
using field::Polynomial;
using field::RatFun;
using field::SurdScalar;
using io::format17;

namespace {

const std::string kVersion = "helixforge 1.0";

struct Context {
  RunOptions options;
  RunResult result;

  void write(const std::string& name, const std::string& content) {
    auto path = options.out / name;
    io::write_atomic(path, content);
    result.files.push_back(path);
  }
  void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }
  void say(const std::string& line) { result.messages.push_back(line); }
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(std::optional<unsigned> digits) : saved_(working_precision()) {
    if (digits) set_working_precision(*digits);
  }
  ~PrecisionGuard() { set_working_precision(saved_); }

 private:
  unsigned saved_;
};

void invariant(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

json warnings_json(const Warnings& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(std::string(to_string(w.kind)) + ": " + w.detail);
  return out;
}

std::pair<Rational, Rational> parse_interval(Fields& f, const std::string& key, Rational lo, Rational hi) {
  if (const json* j = f.optional(key)) {
    std::string where = f.where() + "." + key;
    if (!j->is_array() || j->size() != 2) schema_error(where, "expected [lo, hi]");
    lo = parse_rational((*j)[0], where + "[0]");
    hi = parse_rational((*j)[1], where + "[1]");
    if (!(hi > lo)) schema_error(where, "empty interval");
  }
  return {lo, hi};
}

int parse_samples(Fields& f, int fallback) {
  const json* j = f.optional("samples");
  return j ? static_cast<int>(parse_int(*j, f.where() + ".samples", 2, 1000000)) : fallback;
}

// Common top-level keys; CLI flags take precedence over the config values.
void parse_common(Fields& f, RunOptions& options) {
  f.required("command");
  if (const json* p = f.optional("precision"))
    if (!options.precision) options.precision = static_cast<unsigned>(parse_int(*p, "precision", 16, 10000));
  if (const json* s = f.optional("seed"))
    if (!options.seed) options.seed = static_cast<std::uint64_t>(parse_int(*s, "seed", 0, std::numeric_limits<long>::max()));
}

RVF3 parse_tangent(Fields& f) {
  if (f.has("v")) {
    if (f.has("b1") || f.has("b2")) schema_error(f.where(), "give either \"v\" or \"b1\"/\"b2\", not both");
    const json& v = f.required("v");
    if (!v.is_array() || v.size() != 3) schema_error(f.where() + ".v", "expected three rational functions");
    return RVF3(parse_ratfun(v[0], f.where() + ".v[0]"), parse_ratfun(v[1], f.where() + ".v[1]"),
                parse_ratfun(v[2], f.where() + ".v[2]"));
  }
  RatFun b1 = parse_ratfun(f.required("b1"), f.where() + ".b1");
  RatFun b2 = parse_ratfun(f.required("b2"), f.where() + ".b2");
  return curves::stereographic_tangent(b1, b2);
}

helix::RationalHelix parse_helix(const json& j, const std::string& where) {
  Fields f(j, where);
  if (f.has("v")) schema_error(where, "a helix is given by \"b1\", \"b2\" and \"a3\"");
  RVF3 t = parse_tangent(f);
  RatFun a3 = parse_ratfun(f.required("a3"), where + ".a3");
  f.finish();
  return helix::helix_from_a3(a3, t);
}

std::string samples_csv(const RVF3& r, const RatFun* speed, const Rational& lo, const Rational& hi, int n) {
  std::ostringstream os;
  os << "t,x,y,z" << (speed ? ",speed" : "") << '\n';
  for (int i = 0; i < n; ++i) {
    Rational t = lo + (hi - lo) * Rational(i, n - 1);
    Real tr = to_real(t);
    os << format17(t.convert_to<double>());
    try {
      curves::RealVec p = r.evaluate(tr);
      for (const auto& c : p) os << ',' << format17(c.convert_to<double>());
      if (speed) os << ',' << format17(speed->evaluate(tr).convert_to<double>());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtParameter) throw;
      os << ",nan,nan,nan" << (speed ? ",nan" : "");
    }
    os << '\n';
  }
  return os.str();
}

json degrees(const RVF3& r) {
  int d = 0;
  json comps = json::array();
  for (int i = 0; i < 3; ++i) {
    comps.push_back(r[i].degree());
    d = std::max(d, r[i].degree());
  }
  return json{{"components", comps}, {"max", d}};
}

json helix_check(const RVF3& r) {
  helix::HelixReport rep = helix::helix_verify(r);
  return json{{"is_helix", rep.is_helix},
              {"planar", rep.planar},
              {"exact", rep.exact},
              {"tau_over_kappa", rep.tau_over_kappa.convert_to<double>()},
              {"max_spread", rep.max_spread.convert_to<double>()}};
}

json helix_dump(const helix::RationalHelix& h) {
  const auto& ax = h.basis.axis;
  return json{{"r", dump_rvf3(h.r)},
              {"a1", dump_ratfun(h.a1)},
              {"a2", dump_ratfun(h.a2)},
              {"a3", dump_ratfun(h.a3)},
              {"sigma", dump_ratfun(h.sigma)},
              {"tau_sigma", dump_ratfun(h.tau_sigma)},
              {"axis",
               {{"direction", {dump_scalar(ax.direction[0]), dump_scalar(ax.direction[1]), dump_scalar(ax.direction[2])}},
                {"c", to_string(ax.c)},
                {"d", to_string(ax.d)},
                {"cos_psi", dump_scalar(ax.cos_psi)},
                {"field_sqrt", ax.e}}},
              {"cusps", h.cusps},
              {"warnings", warnings_json(h.warnings)}};
}

// ---------------------------------------------------------------- construct

void cmd_construct(const json& config, Context& ctx) {
  Fields f(config, "config");
  parse_common(f, ctx.options);
  std::string mode = "helix";
  if (const json* m = f.optional("mode")) mode = parse_enum(*m, "config.mode", {"helix", "ph"});
  if (mode == "helix" && f.has("v")) schema_error("config", "\"v\" is only accepted with mode \"ph\"");
  RVF3 v = parse_tangent(f);
  RatFun a3 = parse_ratfun(f.required("a3"), "config.a3");
  auto [lo, hi] = parse_interval(f, "interval", 0, 1);
  int n = parse_samples(f, 101);
  f.finish();
  PrecisionGuard guard(ctx.options.precision);

  json curve, report;
  RVF3 r;
  RatFun speed;
  std::vector<double> cusps;
  Warnings warnings;
  if (mode == "helix") {
    helix::RationalHelix h = helix::helix_from_a3(a3, v);
    invariant(h.r.derivative() == h.t * h.sigma, "r' = sigma t fails for the constructed helix");
    r = h.r;
    speed = h.sigma;
    cusps = h.cusps;
    warnings = h.warnings;
    curve = helix_dump(h);
  } else {
    curves::PHCurve c = curves::ph_curve_from_tangent(a3, v);
    invariant(c.r.derivative() == c.v * c.g, "r' = g v fails for the constructed curve");
    r = c.r;
    speed = c.g;
    warnings = c.warnings;
    for (const auto& iv : field::isolate_roots(c.g.num(), lo, hi)) cusps.push_back(iv.approx());
    curve = json{{"r", dump_rvf3(c.r)}, {"v", dump_rvf3(c.v)}, {"a1", dump_ratfun(c.a1)},
                 {"a2", dump_ratfun(c.a2)}, {"a3", dump_ratfun(c.a3)}, {"g", dump_ratfun(c.g)}};
  }
  report = json{{"mode", mode},
                {"degree", degrees(r)},
                {"cusps", cusps},
                {"helix_check", helix_check(r)},
                {"warnings", warnings_json(warnings)},
                {"version", kVersion}};
  ctx.write_json("curve.json", curve);
  ctx.write_json("report.json", report);
  ctx.write("samples.csv", samples_csv(r, &speed, lo, hi, n));
  ctx.say("curve degree " + std::to_string(report["degree"]["max"].get<int>()) + ", " +
          std::to_string(cusps.size()) + " cusp(s) on the interval");
}

// ---------------------------------------------------------------- hermite

void cmd_hermite(const json& config, Context& ctx) {
  Fields f(config, "config");
  parse_common(f, ctx.options);
  hermite::HermiteData data;
  auto p0 = parse_vec3(f.required("p0"), "config.p0");
  auto p1 = parse_vec3(f.required("p1"), "config.p1");
  for (int i = 0; i < 3; ++i) {
    data.p0[i] = p0[i];
    data.p1[i] = p1[i];
  }
  data.t0 = parse_vec3(f.required("t0"), "config.t0");
  data.t1 = parse_vec3(f.required("t1"), "config.t1");
  hermite::HermiteOptions opts;
  if (const json* b = f.optional("circle_bulge")) opts.circle_bulge = parse_rational(*b, "config.circle_bulge");
  int n = parse_samples(f, 101);
  f.finish();
  PrecisionGuard guard(ctx.options.precision);

  hermite::HermiteSolution s = hermite::interpolate(data, opts);
  const Real tiny = pow(Real(10), -static_cast<int>(working_precision()) / 2);
  if (s.tangents_exact)
    invariant(s.position_residual0 < tiny && s.position_residual1 < tiny, "Hermite endpoint residual is not zero");

  json bez = json::array();
  for (const auto& c : s.bezier.c) bez.push_back(dump_scalar(c));
  json rot = json::array();
  for (const auto& row : s.rotation) rot.push_back({to_string(row[0]), to_string(row[1]), to_string(row[2])});
  json out{{"bezier", {{"c", bez}, {"w1", dump_scalar(s.bezier.w1)}, {"w2", dump_scalar(s.bezier.w2)}}},
           {"b1", dump_ratfun(s.b1)},
           {"b2", dump_ratfun(s.b2)},
           {"rotated", s.rotated},
           {"rotation", rot},
           {"tangents_exact", s.tangents_exact},
           {"residuals",
            {{"position0", s.position_residual0.convert_to<double>()},
             {"position1", s.position_residual1.convert_to<double>()},
             {"tangent_angle0", s.tangent_angle0.convert_to<double>()},
             {"tangent_angle1", s.tangent_angle1.convert_to<double>()},
             {"boundary", s.boundary_residual.convert_to<double>()}}},
           {"helix", helix_dump(s.helix)},
           {"version", kVersion}};
  ctx.write_json("hermite.json", out);
  ctx.write("samples.csv", samples_csv(s.helix.r, &s.helix.sigma, 0, 1, n));
  std::ostringstream msg;
  msg << "c = (" << s.bezier.c[0] << ", " << s.bezier.c[1] << ", " << s.bezier.c[2] << ", " << s.bezier.c[3]
      << "), w1 = " << s.bezier.w1 << ", w2 = " << s.bezier.w2;
  ctx.say(msg.str());
}

// ---------------------------------------------------------------- rmf

struct FrameChoice {
  int m = 3, k = 3;
  double theta0 = 0;
  std::string theta_mode = "zero";
  rmf::MinimaxOptions minimax;
};

FrameChoice parse_frame_choice(Fields& f, const helix::RationalHelix& h, double t0) {
  FrameChoice c;
  if (const json* m = f.optional("m")) c.m = static_cast<int>(parse_int(*m, "config.m", 0, 12));
  if (const json* k = f.optional("k")) c.k = static_cast<int>(parse_int(*k, "config.k", 0, 12));
  if (const json* th = f.optional("theta0")) {
    if (th->is_string()) {
      c.theta_mode = parse_enum(*th, "config.theta0", {"zero", "half-torsion"});
    } else {
      c.theta_mode = "value";
      c.theta0 = parse_double(*th, "config.theta0");
    }
  }
  if (c.theta_mode == "half-torsion") c.theta0 = rmf::convention_theta0(h, rmf::ThetaConvention::HalfTorsion, t0);
  if (const json* nm = f.optional("norm"))
    c.minimax.norm = parse_enum(*nm, "config.norm", {"absolute", "relative"}) == "relative" ? rmf::ErrorNorm::Relative
                                                                                          : rmf::ErrorNorm::Absolute;
  if (const json* it = f.optional("max_iterations"))
    c.minimax.max_iterations = static_cast<int>(parse_int(*it, "config.max_iterations", 1, 10000));
  return c;
}

json piece_json(const rmf::RmfPiece& p) {
  auto dbl = [](const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(x);
    return a;
  };
  return json{{"lo", p.lo},
              {"hi", p.hi},
              {"pre_rotation", {{"u", p.u.str()}, {"v", p.v.str()}}},
              {"a", dump_polynomial(p.frame.a)},
              {"b", dump_polynomial(p.frame.b)},
              {"p", dbl(p.fit.p)},
              {"q", dbl(p.fit.q)},
              {"eps", p.fit.eps},
              {"alternations", p.fit.alternations()},
              {"alternation_points", dbl(p.fit.alternation_points)},
              {"iterations", p.fit.iterations},
              {"converged", p.fit.converged},
              {"stagnated", p.fit.stagnated},
              {"representable", p.fit.representable},
              {"rmf_condition_error", p.frame.rmf_condition_error},
              {"warnings", warnings_json(p.fit.warnings)},
              {"f2", dump_rvf3(p.frame.f2)},
              {"f3", dump_rvf3(p.frame.f3)}};
}

const rmf::RmfPiece& piece_for(const rmf::RmfApproximation& a, double t) {
  for (const auto& p : a.pieces)
    if (t <= p.hi) return p;
  return a.pieces.back();
}

void cmd_rmf(const json& config, Context& ctx) {
  Fields f(config, "config");
  parse_common(f, ctx.options);
  PrecisionGuard guard(ctx.options.precision);
  helix::RationalHelix h = parse_helix(f.required("helix"), "config.helix");
  auto [lo, hi] = parse_interval(f, "interval", 0, 1);
  const double dlo = lo.convert_to<double>(), dhi = hi.convert_to<double>();
  FrameChoice fc = parse_frame_choice(f, h, dlo);
  int n = parse_samples(f, 257);
  f.finish();

  rmf::RmfApproximation a = rmf::approximate_rmf(h, fc.m, fc.k, fc.theta0, fc.minimax, dlo, dhi);
  bool stagnated = false;
  double eps = 0, err = 0;
  json pieces = json::array();
  for (const auto& p : a.pieces) {
    pieces.push_back(piece_json(p));
    stagnated = stagnated || p.fit.stagnated;
    eps = std::max(eps, p.fit.eps);
    err = std::max(err, p.frame.rmf_condition_error);
  }

  std::ostringstream csv;
  csv << "t,theta,tan_half,approx_tan_half,f2p_dot_f3\n";
  std::vector<RVF3> f2d;
  for (const auto& p : a.pieces) f2d.push_back(p.frame.f2.derivative());
  for (int i = 0; i < n; ++i) {
    double t = dlo + (dhi - dlo) * i / (n - 1);
    const rmf::RmfPiece& p = piece_for(a, t);
    std::size_t idx = static_cast<std::size_t>(&p - a.pieces.data());
    Real tr(t);
    Real approx = p.frame.a.evaluate(tr) / p.frame.b.evaluate(tr);
    Real w = curves::dot(f2d[idx].evaluate(tr), p.frame.f3.evaluate(tr));
    csv << format17(t) << ',' << format17(a.theta(t)) << ',' << format17(a.theta.tan_half(t)) << ','
        << format17(approx.convert_to<double>()) << ',' << format17(w.convert_to<double>()) << '\n';
  }

  json out{{"m", fc.m},
           {"k", fc.k},
           {"theta0", {{"mode", fc.theta_mode}, {"value", fc.theta0}}},
           {"interval", {to_string(lo), to_string(hi)}},
           {"norm", fc.minimax.norm == rmf::ErrorNorm::Relative ? "relative" : "absolute"},
           {"eps", eps},
           {"rmf_condition_error", err},
           {"theta_warnings", warnings_json(a.theta.warnings)},
           {"pieces", pieces},
           {"version", kVersion}};
  ctx.write_json("frame.json", out);
  ctx.write("rmf_error.csv", csv.str());
  std::ostringstream msg;
  msg << "(" << fc.m << "," << fc.k << ") eps " << eps << ", max |f2'.f3| " << err << ", " << a.pieces.size()
      << " piece(s)";
  ctx.say(msg.str());
  if (stagnated) {
    ctx.say("RemezStagnation: best iterate written");
    ctx.result.exit_code = kApproximation;
  }
}

// ---------------------------------------------------------------- sweep

surface::ProfileCurve parse_profile(const json& j) {
  Fields f(j, "config.profile");
  std::string kind = parse_enum(f.required("kind"), "config.profile.kind", {"line", "polyline", "rational-bezier"});
  auto [s0, s1] = parse_interval(f, "domain", 0, 1);
  auto points = [&](const char* key) {
    const json& arr = f.required(key);
    std::string where = std::string("config.profile.") + key;
    if (!arr.is_array() || arr.size() < 2) schema_error(where, "expected at least two [x, y] points");
    std::vector<std::array<Rational, 2>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& p = arr[i];
      std::string w = where + "[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2) schema_error(w, "expected [x, y]");
      out.push_back({parse_rational(p[0], w + "[0]"), parse_rational(p[1], w + "[1]")});
    }
    return out;
  };
  surface::ProfileCurve prof;
  if (kind == "line") {
    auto coeffs = [&](const char* key) {
      const json& c = f.required(key);
      std::string where = std::string("config.profile.") + key;
      if (!c.is_array() || c.size() != 2) schema_error(where, "a line component is [constant, slope]");
      return std::array<Rational, 2>{parse_rational(c[0], where + "[0]"), parse_rational(c[1], where + "[1]")};
    };
    auto c1 = coeffs("c1"), c2 = coeffs("c2");
    prof = surface::ProfileCurve::line(c1[1], c1[0], c2[1], c2[0], s0, s1);
  } else if (kind == "polyline") {
    prof = surface::ProfileCurve::polyline(points("points"), s0, s1);
  } else {
    auto control = points("control");
    const json& w = f.required("weights");
    if (!w.is_array() || w.size() != control.size())
      schema_error("config.profile.weights", "expected one weight per control point");
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < w.size(); ++i)
      weights.push_back(parse_rational(w[i], "config.profile.weights[" + std::to_string(i) + "]"));
    prof = surface::ProfileCurve::rational_bezier(control, weights, s0, s1);
  }
  f.finish();
  return prof;
}

void cmd_sweep(const json& config, Context& ctx) {
  Fields f(config, "config");
  parse_common(f, ctx.options);
  PrecisionGuard guard(ctx.options.precision);
  helix::RationalHelix h = parse_helix(f.required("helix"), "config.helix");
  std::string frame = "approx-rmf";
  if (const json* fr = f.optional("frame")) frame = parse_enum(*fr, "config.frame", {"approx-rmf", "fsf"});
  auto [t0, t1] = parse_interval(f, "t_range", 0, 1);
  FrameChoice fc = parse_frame_choice(f, h, t0.convert_to<double>());
  surface::ProfileCurve profile = parse_profile(f.required("profile"));
  int ns = 100, nt = 100;
  if (const json* g = f.optional("grid")) {
    if (!g->is_array() || g->size() != 2) schema_error("config.grid", "expected [ns, nt]");
    ns = static_cast<int>(parse_int((*g)[0], "config.grid[0]", 2, 100000));
    nt = static_cast<int>(parse_int((*g)[1], "config.grid[1]", 2, 100000));
  }
  double threshold = 1e-9;
  if (const json* th = f.optional("threshold")) threshold = parse_double(*th, "config.threshold");
  bool with_k = true;
  if (const json* c = f.optional("curvature")) {
    if (!c->is_boolean()) schema_error("config.curvature", "expected true or false");
    with_k = c->get<bool>();
  }
  f.finish();

  surface::SweepSurface S;
  json frame_info{{"kind", frame}};
  if (frame == "fsf") {
    S = surface::sweep_fsf(h, profile, t0, t1);
  } else {
    rmf::RmfApproximation a =
        rmf::approximate_rmf(h, fc.m, fc.k, fc.theta0, fc.minimax, t0.convert_to<double>(), t1.convert_to<double>());
    if (a.pieces.size() != 1)
      throw Error(ErrorKind::DomainMismatch, "the frame approximation splits t_range into " +
                                                 std::to_string(a.pieces.size()) + " pieces; sweep each piece separately");
    S = surface::sweep(h, a.pieces[0], profile, t0, t1);
    frame_info["m"] = fc.m;
    frame_info["k"] = fc.k;
    frame_info["theta0"] = fc.theta0;
    frame_info["eps"] = a.pieces[0].fit.eps;
    frame_info["rmf_condition_error"] = a.pieces[0].frame.rmf_condition_error;
  }

  surface::SurfaceEvaluator ev(S);
  surface::Mesh mesh = surface::sample_mesh(ev, ns, nt, with_k);
  ctx.write("mesh.obj", surface::to_obj(mesh));

  std::size_t degenerate = 0;
  for (auto d : mesh.degenerate_quads) degenerate += d;
  json report{{"frame", frame_info},
              {"grid", {{"ns", ns}, {"nt", nt}}},
              {"s_range", {to_string(profile.s0()), to_string(profile.s1())}},
              {"t_range", {to_string(t0), to_string(t1)}},
              {"vertices", mesh.vertices.size()},
              {"quads", mesh.quads.size()},
              {"degenerate_quads", degenerate},
              {"version", kVersion}};

  std::size_t regular = 0;
  if (with_k) {
    ctx.write("mesh_K.csv", surface::curvature_csv(mesh));
    double kmin = 0, kmax = 0, sum = 0;
    std::size_t imin = 0, imax = 0;
    for (std::size_t idx = 0; idx < mesh.K->size(); ++idx) {
      if (mesh.singular[idx]) continue;
      double k = (*mesh.K)[idx];
      if (regular == 0 || k < kmin) kmin = k, imin = idx;
      if (regular == 0 || k > kmax) kmax = k, imax = idx;
      sum += k;
      ++regular;
    }
    auto at = [&](std::size_t idx) {
      return json{{"s", mesh.s[idx % ns]}, {"t", mesh.t[idx / ns]}};
    };
    double abs_max = std::max(std::abs(kmin), std::abs(kmax));
    report["regular"] = regular;
    report["singular"] = mesh.K->size() - regular;
    report["threshold"] = threshold;
    if (regular > 0) {
      report["K"] = {{"min", kmin}, {"max", kmax}, {"mean", sum / static_cast<double>(regular)},
                     {"abs_max", abs_max}, {"argmin", at(imin)}, {"argmax", at(imax)}};
      report["verdict"] = abs_max < threshold ? "PASS" : "FAIL";
      std::ostringstream msg;
      msg << "K in [" << kmin << ", " << kmax << "], |K|max " << abs_max << " at (s=" << at(abs_max == std::abs(kmin) ? imin : imax)["s"]
          << ", t=" << at(abs_max == std::abs(kmin) ? imin : imax)["t"] << "), verdict "
          << report["verdict"].get<std::string>() << " against " << threshold;
      ctx.say(msg.str());
    } else {
      report["verdict"] = "FAIL";
    }
    if (regular < mesh.K->size())
      ctx.say("warning: " + std::to_string(mesh.K->size() - regular) + " singular grid point(s)");
  }
  if (degenerate > 0) ctx.say("warning: degenerate mesh, " + std::to_string(degenerate) + " collapsed quad(s)");
  ctx.write_json("report.json", report);
  if (with_k && regular == 0) {
    ctx.say("SingularPoint: no regular grid point");
    ctx.result.exit_code = kSurface;
  }
}

int exit_code_for(const std::string& command, ErrorKind kind) {
  if (kind == ErrorKind::Schema) return kSchema;
  if (kind == ErrorKind::InvariantViolation) return kInternal;
  if (command == "hermite") return kInterpolation;
  if (command == "rmf") return kApproximation;
  if (command == "sweep") return kSurface;
  // construct: the config describes no valid curve.
  return kSchema;
}

}  // namespace

RunResult run(const std::string& command, const json& config, const RunOptions& options) {
  Context ctx{options, {}};
  try {
    if (!config.is_object()) schema_error("config", "expected a JSON object");
    if (!config.contains("command")) schema_error("config", "missing key \"command\"");
    std::string declared = parse_enum(config.at("command"), "config.command", {"construct", "hermite", "rmf", "sweep"});
    if (declared != command)
      schema_error("config.command", "config is for \"" + declared + "\" but the command is \"" + command + "\"");
    if (command == "construct")
      cmd_construct(config, ctx);
    else if (command == "hermite")
      cmd_hermite(config, ctx);
    else if (command == "rmf")
      cmd_rmf(config, ctx);
    else
      cmd_sweep(config, ctx);
  } catch (const Error& e) {
    ctx.result.exit_code = exit_code_for(command, e.kind());
    ctx.say(e.what());
  } catch (const json::exception& e) {
    ctx.result.exit_code = kSchema;
    ctx.say(std::string("Schema: ") + e.what());
  } catch (const std::exception& e) {
    ctx.result.exit_code = kInternal;
    ctx.say(std::string("InvariantViolation: ") + e.what());
  }
  return ctx.result;
}

RunResult run_file(const std::string& command, const std::filesystem::path& config, const RunOptions& options) {
  std::ifstream in(config);
  if (!in) {
    RunResult r;
    r.exit_code = kSchema;
    r.messages.push_back("Schema: cannot read config file " + config.string());
    return r;
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    RunResult r;
    r.exit_code = kSchema;
    r.messages.push_back(std::string("Schema: ") + e.what());
    return r;
  }
  return run(command, j, options);
}

}  // namespace helixforge::cli
