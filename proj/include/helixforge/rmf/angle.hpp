#pragma once

#include <functional>
#include <vector>

#include "helixforge/errors.hpp"
#include "helixforge/helix/helix.hpp"

namespace helixforge::rmf {

/// How the integration constant of the rotation angle is fixed.
enum class ThetaConvention {
  /// theta(t0) = 0: the frame starts aligned with (w2, w3).
  Zero,
  /// tan(theta(t0)/2) = tau sigma (t0) / 2, the value the closed form of
  /// the approximation example takes at its left end.
  HalfTorsion,
};

/// Rotation angle of the rotation-minimizing frame relative to (w2, w3), stored as
/// cumulative quadrature values on a node grid and evaluated between nodes by
/// further adaptive quadrature.
struct AngleFunction {
  double t0 = 0, t1 = 1;
  double theta0 = 0;
  std::vector<double> nodes;
  std::vector<double> values;
  /// Sum of the Gauss-Kronrod error estimates along the grid.
  double error_bound = 0;
  double tol = 1e-12;
  std::function<double(double)> rate;
  Warnings warnings;

  double operator()(double t) const;
  double derivative(double t) const { return rate(t); }
  double tan_half(double t) const;
};

/// theta(t) = theta0 + integral of rate from t0. Breakpoints are added to the node
/// grid, which is uniform with n_nodes points otherwise.
AngleFunction integrate_angle(std::function<double(double)> rate, double t0, double t1, double theta0,
                              double tol = 1e-12, const std::vector<double>& breaks = {}, int n_nodes = 257);

/// theta' = -tau sigma along the helix. Cusps inside the interval become
/// breakpoints and raise a CuspInInterval warning.
AngleFunction theta(const helix::RationalHelix& h, double theta0 = 0, double tol = 1e-12, double t0 = 0,
                    double t1 = 1);

double convention_theta0(const helix::RationalHelix& h, ThetaConvention convention, double t0 = 0);

}  // namespace helixforge::rmf
