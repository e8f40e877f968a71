#pragma once

#include <functional>
#include <vector>

#include "helixforge/errors.hpp"
#include "helixforge/field/polynomial.hpp"

namespace helixforge::rmf {

enum class ErrorNorm { Absolute, Relative };

struct MinimaxOptions {
  ErrorNorm norm = ErrorNorm::Absolute;
  int max_iterations = 60;
  /// Relative change of the levelled error below which the exchange has stalled.
  double stagnation = 1e-12;
  /// Uniform sampling used to locate error extrema before local refinement.
  int grid = 4000;
};

/// Real-coefficient rational function p/q with q normalized to q(lo) = 1.
/// Coefficients are ascending monomials in t.
struct MinimaxResult {
  std::vector<double> p, q;
  double lo = 0, hi = 1;
  double eps = 0;
  /// Final reference (the m + k + 2 trial nodes).
  std::vector<double> reference;
  /// Locations of the alternating near-extrema of the error (|e| within 5% of eps).
  std::vector<double> alternation_points;
  int iterations = 0;
  /// h is reproduced to rounding level; no alternation set exists.
  bool representable = false;
  bool converged = false;
  bool stagnated = false;
  Warnings warnings;

  double operator()(double t) const;
  std::size_t alternations() const { return alternation_points.size(); }
};

/// Rational Remez exchange for the (m, k) minimax approximation of h on [lo, hi].
/// Throws DenominatorRootInDomain when the best iterate has a pole in [lo, hi].
/// A stalled exchange returns the best iterate with stagnated set and a
/// RemezStagnation warning.
MinimaxResult minimax_rational(const std::function<double(double)>& h, double lo, double hi, int m, int k,
                               const MinimaxOptions& options = {});

/// Longest alternating sequence of local extrema of err whose magnitude is at least
/// (1 - rel) * eps.
std::vector<double> alternation_points(const std::function<double(double)>& err, double lo, double hi, double eps,
                                       double rel = 0.05, int grid = 20000);

/// Exact polynomial with the binary values of the given coefficients.
field::Polynomial exact_polynomial(const std::vector<double>& coefficients);

double horner(const std::vector<double>& c, double x);

}  // namespace helixforge::rmf
