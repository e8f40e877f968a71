#include "helixforge/rmf/minimax.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <string>

namespace helixforge::rmf {

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double MinimaxResult::operator()(double t) const { return horner(p, t) / horner(q, t); }

field::Polynomial exact_polynomial(const std::vector<double>& coefficients) {
  std::vector<field::SurdScalar> c;
  c.reserve(coefficients.size());
  for (double x : coefficients) c.emplace_back(Rational(x));
  return field::Polynomial(c);
}

namespace {

struct Extremum {
  double x;
  double e;
};

// Local extrema of err on a uniform grid, each refined by Brent's method, endpoints included.
std::vector<Extremum> extrema(const std::function<double(double)>& err, double lo, double hi, int grid) {
  std::vector<double> xs(grid + 1), es(grid + 1);
  for (int i = 0; i <= grid; ++i) {
    xs[i] = lo + (hi - lo) * i / grid;
    es[i] = err(xs[i]);
  }
  std::vector<Extremum> out;
  auto refine = [&](int i) {
    double sgn = es[i] >= 0 ? 1.0 : -1.0;
    auto neg = [&](double x) { return -sgn * err(x); };
    std::uintmax_t iters = 100;
    auto r = boost::math::tools::brent_find_minima(neg, xs[i - 1], xs[i + 1], std::numeric_limits<double>::digits / 2, iters);
    double e = err(r.first);
    if (std::abs(e) >= std::abs(es[i])) return Extremum{r.first, e};
    return Extremum{xs[i], es[i]};
  };
  out.push_back({xs[0], es[0]});
  for (int i = 1; i < grid; ++i) {
    double a = std::abs(es[i]);
    bool peak = (es[i] >= es[i - 1] && es[i] >= es[i + 1]) || (es[i] <= es[i - 1] && es[i] <= es[i + 1]);
    if (peak && a > 0) out.push_back(refine(i));
  }
  out.push_back({xs[grid], es[grid]});
  return out;
}

// Collapse runs of equal sign to their largest member.
std::vector<Extremum> alternating(const std::vector<Extremum>& ex) {
  std::vector<Extremum> out;
  for (const auto& e : ex) {
    if (e.e == 0) continue;
    if (!out.empty() && (out.back().e > 0) == (e.e > 0)) {
      if (std::abs(e.e) > std::abs(out.back().e)) out.back() = e;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

struct Approximant {
  Eigen::VectorXd p, q;  // in x = (t - lo)/(hi - lo), q[0] = 1
  double E = 0;
};

double eval(const Eigen::VectorXd& c, double x) {
  double acc = 0;
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

// Newton solve of p(x_i) - (f_i - s_i w_i E) q(x_i) = 0 on the reference, starting at `start`.
bool levelled_solve(const std::vector<double>& xs, const std::vector<double>& f, const std::vector<double>& w,
                    int m, int k, Approximant& a) {
  const int n = m + k + 2;
  for (int it = 0; it < 30; ++it) {
    Eigen::MatrixXd J(n, n);
    Eigen::VectorXd F(n);
    for (int i = 0; i < n; ++i) {
      double x = xs[i], s = (i % 2 == 0) ? 1.0 : -1.0;
      double target = f[i] - s * w[i] * a.E;
      double qx = eval(a.q, x);
      F[i] = eval(a.p, x) - target * qx;
      double xp = 1;
      for (int j = 0; j <= m; ++j, xp *= x) J(i, j) = xp;
      xp = x;
      for (int j = 1; j <= k; ++j, xp *= x) J(i, m + j) = -target * xp;
      J(i, n - 1) = s * w[i] * qx;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
    if (!lu.isInvertible()) return false;
    Eigen::VectorXd d = lu.solve(-F);
    if (!d.allFinite()) return false;
    a.p += d.head(m + 1);
    for (int j = 1; j <= k; ++j) a.q[j] += d[m + j];
    a.E += d[n - 1];
    if (d.norm() <= 1e-15 * (1 + a.p.norm() + a.q.norm() + std::abs(a.E))) return true;
  }
  return true;
}

// Coefficients of c(x) with x = (t - lo)/L, re-expanded in powers of t.
std::vector<double> to_t(const Eigen::VectorXd& c, double lo, double L) {
  std::size_t n = static_cast<std::size_t>(c.size());
  std::vector<double> out(n, 0.0);
  // Horner on polynomials: acc = acc * (t - lo)/L + c_i
  std::vector<double> acc;
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) {
    std::vector<double> next(acc.size() + 1, 0.0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j] / L;
      next[j] -= acc[j] * lo / L;
    }
    next[0] += c[i];
    acc = std::move(next);
  }
  for (std::size_t j = 0; j < n && j < acc.size(); ++j) out[j] = acc[j];
  return out;
}

bool pole_free(const Eigen::VectorXd& q, int grid) {
  double q0 = eval(q, 0);
  for (int i = 0; i <= grid; ++i) {
    double v = eval(q, static_cast<double>(i) / grid);
    if (!(v * q0 > 0)) return false;
  }
  return true;
}

}  // namespace

std::vector<double> alternation_points(const std::function<double(double)>& err, double lo, double hi, double eps,
                                       double rel, int grid) {
  std::vector<Extremum> big;
  for (const auto& e : extrema(err, lo, hi, grid))
    if (std::abs(e.e) >= (1 - rel) * eps && eps > 0) big.push_back(e);
  std::vector<double> out;
  for (const auto& e : alternating(big)) out.push_back(e.x);
  return out;
}

namespace {

MinimaxResult remez(const std::function<double(double)>& h, double lo, double hi, int m, int k,
                    const MinimaxOptions& opt, bool& degenerate) {
  degenerate = false;
  const int n = m + k + 2;
  const double L = hi - lo;
  auto fx = [&](double x) { return h(lo + L * x); };
  auto weight = [&](double x) { return opt.norm == ErrorNorm::Relative ? std::abs(fx(x)) : 1.0; };

  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = (1 - std::cos(M_PI * i / (n - 1))) / 2;

  Approximant cur;
  cur.p = Eigen::VectorXd::Zero(m + 1);
  cur.q = Eigen::VectorXd::Zero(k + 1);
  cur.q[0] = 1;

  double scale = 0;
  for (int i = 0; i <= 100; ++i) scale = std::max(scale, std::abs(fx(i / 100.0)));
  if (scale == 0) scale = 1;

  MinimaxResult res;
  res.lo = lo;
  res.hi = hi;
  Approximant best = cur;
  double best_eps = std::numeric_limits<double>::infinity();
  std::vector<double> best_ref = xs;
  double prev = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= opt.max_iterations; ++it) {
    res.iterations = it;
    std::vector<double> f(n), w(n);
    for (int i = 0; i < n; ++i) {
      f[i] = fx(xs[i]);
      w[i] = weight(xs[i]);
    }
    Approximant trial = cur;
    if (!levelled_solve(xs, f, w, m, k, trial) || !pole_free(trial.q, 2000)) {
      // restart the inner solve from the plain interpolant
      trial.p = Eigen::VectorXd::Zero(m + 1);
      trial.q = Eigen::VectorXd::Zero(k + 1);
      trial.q[0] = 1;
      trial.E = 0;
      if (!levelled_solve(xs, f, w, m, k, trial) || !pole_free(trial.q, 2000)) {
        res.stagnated = true;
        degenerate = true;
        res.warnings.push_back({ErrorKind::RemezStagnation, "levelled system singular or pole in domain"});
        break;
      }
    }
    cur = trial;

    auto err = [&](double x) { return (fx(x) - eval(cur.p, x) / eval(cur.q, x)) / weight(x); };
    auto ex = alternating(extrema(err, 0, 1, opt.grid));
    double emax = 0;
    for (const auto& e : ex) emax = std::max(emax, std::abs(e.e));
    if (emax < best_eps) {
      best_eps = emax;
      best = cur;
      best_ref = xs;
    }
    if (emax <= 1e-14 * scale) {  // exactly representable up to rounding
      res.converged = true;
      break;
    }
    if (static_cast<int>(ex.size()) < n) {
      res.stagnated = true;
      degenerate = true;
      res.warnings.push_back({ErrorKind::RemezStagnation, "error curve has fewer alternations than the reference"});
      break;
    }
    // window of n consecutive alternants containing the global maximum, best minimum
    std::size_t imax = 0;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (std::abs(ex[i].e) > std::abs(ex[imax].e)) imax = i;
    std::size_t start = 0;
    double best_min = -1;
    for (std::size_t s = 0; s + n <= ex.size(); ++s) {
      if (imax < s || imax >= s + n) continue;
      double mn = std::numeric_limits<double>::infinity();
      for (std::size_t i = s; i < s + n; ++i) mn = std::min(mn, std::abs(ex[i].e));
      if (mn > best_min) {
        best_min = mn;
        start = s;
      }
    }
    for (int i = 0; i < n; ++i) xs[i] = ex[start + i].x;

    if ((emax - best_min) <= 1e-9 * emax) {
      res.converged = true;
      best = cur;
      best_eps = emax;
      best_ref = xs;
      break;
    }
    if (std::abs(prev - emax) <= opt.stagnation * emax) {
      res.stagnated = true;
      res.warnings.push_back({ErrorKind::RemezStagnation, "levelled error stopped changing before equioscillation"});
      break;
    }
    prev = emax;
  }
  if (!res.converged && !res.stagnated) {
    res.stagnated = true;
    res.warnings.push_back({ErrorKind::RemezStagnation, "iteration cap reached"});
  }

  if (!pole_free(best.q, 20000))
    throw Error(ErrorKind::DenominatorRootInDomain, "minimax denominator vanishes on the interval");

  double q_lo = best.q[0];
  res.p = to_t(best.p / q_lo, lo, L);
  res.q = to_t(best.q / q_lo, lo, L);
  for (double x : best_ref) res.reference.push_back(lo + L * x);

  auto final_err = [&](double t) {
    double w = opt.norm == ErrorNorm::Relative ? std::abs(h(t)) : 1.0;
    return (h(t) - res(t)) / w;
  };
  double eps = 0;
  for (const auto& e : extrema(final_err, lo, hi, 20000)) eps = std::max(eps, std::abs(e.e));
  res.eps = eps;
  double fscale = opt.norm == ErrorNorm::Relative ? 1.0 : scale;
  res.representable = eps <= 1e-13 * fscale;
  // at rounding level the error curve is noise and has no equioscillation to report
  if (!res.representable) res.alternation_points = alternation_points(final_err, lo, hi, eps);
  return res;
}

}  // namespace

MinimaxResult minimax_rational(const std::function<double(double)>& h, double lo, double hi, int m, int k,
                               const MinimaxOptions& opt) {
  if (m < 0 || k < 0) throw Error(ErrorKind::DomainMismatch, "negative degree");
  if (!(hi > lo)) throw Error(ErrorKind::DomainMismatch, "empty approximation interval");
  bool degenerate = false;
  MinimaxResult res = remez(h, lo, hi, m, k, opt, degenerate);
  if (!degenerate) return res;
  // A singular levelled system means h is (nearly) representable with a common
  // factor to spare; the lower-degree problems are then well posed.
  for (auto [mm, kk] : {std::pair{m - 1, k}, std::pair{m, k - 1}}) {
    if (mm < 0 || kk < 0) continue;
    MinimaxResult c = minimax_rational(h, lo, hi, mm, kk, opt);
    if (c.eps < res.eps) {
      c.p.resize(m + 1, 0.0);
      c.q.resize(k + 1, 0.0);
      c.warnings.push_back({ErrorKind::RemezStagnation, "degenerate (" + std::to_string(m) + "," +
                                                            std::to_string(k) + ") problem solved at (" +
                                                            std::to_string(mm) + "," + std::to_string(kk) + ")"});
      res = std::move(c);
    }
  }
  return res;
}

}  // namespace helixforge::rmf
