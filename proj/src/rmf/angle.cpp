#include "helixforge/rmf/angle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "helixforge/field/numeric.hpp"

namespace helixforge::rmf {

namespace {

// Integrates over [-1, 1] after an explicit affine map so the error estimate and the
// tolerance refer to the same integral.
double gk(const std::function<double(double)>& f, double a, double b, double tol, double* err) {
  if (a == b) {
    if (err) *err = 0;
    return 0;
  }
  const double mid = (a + b) / 2, half = (b - a) / 2;
  auto mapped = [&](double x) { return half * f(mid + half * x); };
  double e = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(mapped, -1.0, 1.0, 15, tol, &e);
  if (err) *err = e;
  return v;
}

}  // namespace

double AngleFunction::operator()(double t) const {
  if (t < t0 || t > t1) throw Error(ErrorKind::DomainMismatch, "angle evaluated outside its interval");
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  std::size_t i = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
  if (i + 1 >= nodes.size()) return values.back();
  if (t == nodes[i]) return values[i];
  return values[i] + gk(rate, nodes[i], t, tol, nullptr);
}

double AngleFunction::tan_half(double t) const { return std::tan((*this)(t) / 2); }

AngleFunction integrate_angle(std::function<double(double)> rate, double t0, double t1, double theta0, double tol,
                              const std::vector<double>& breaks, int n_nodes) {
  if (!(t1 > t0)) throw Error(ErrorKind::DomainMismatch, "empty integration interval");
  AngleFunction a;
  a.t0 = t0;
  a.t1 = t1;
  a.theta0 = theta0;
  a.tol = tol;
  a.rate = std::move(rate);
  n_nodes = std::max(n_nodes, 2);
  for (int i = 0; i < n_nodes; ++i) a.nodes.push_back(t0 + (t1 - t0) * i / (n_nodes - 1));
  for (double b : breaks)
    if (b > t0 && b < t1) a.nodes.push_back(b);
  std::sort(a.nodes.begin(), a.nodes.end());
  a.nodes.erase(std::unique(a.nodes.begin(), a.nodes.end()), a.nodes.end());

  a.values.resize(a.nodes.size());
  a.values[0] = theta0;
  for (std::size_t i = 1; i < a.nodes.size(); ++i) {
    double err = 0;
    a.values[i] = a.values[i - 1] + gk(a.rate, a.nodes[i - 1], a.nodes[i], tol, &err);
    a.error_bound += err;
  }
  return a;
}

AngleFunction theta(const helix::RationalHelix& h, double theta0, double tol, double t0, double t1) {
  field::NumericRatFun<double> k(h.tau_sigma);
  std::vector<double> breaks;
  Warnings ws;
  for (double c : h.cusps) {
    if (c > t0 && c < t1) {
      breaks.push_back(c);
      std::ostringstream os;
      os.precision(17);
      os << "cusp at t = " << c << "; quadrature split there";
      ws.push_back({ErrorKind::CuspInInterval, os.str()});
    }
  }
  AngleFunction a = integrate_angle([k](double t) { return -k(t); }, t0, t1, theta0, tol, breaks);
  a.warnings = std::move(ws);
  return a;
}

double convention_theta0(const helix::RationalHelix& h, ThetaConvention convention, double t0) {
  if (convention == ThetaConvention::Zero) return 0;
  field::NumericRatFun<double> k(h.tau_sigma);
  return 2 * std::atan(k(t0) / 2);
}

}  // namespace helixforge::rmf
