#pragma once

#include <vector>

#include "helixforge/helix/helix.hpp"
#include "helixforge/rmf/angle.hpp"
#include "helixforge/rmf/minimax.hpp"

namespace helixforge::rmf {

using curves::RVF3;
using field::Polynomial;
using field::RatFun;

/// Rational adapted frame obtained by rotating (w2, w3) through the angle with
/// tan(theta/2) = a/b:
///   (f2, f3) = -1/(a^2 + b^2) [[a^2 - b^2, -2ab], [2ab, a^2 - b^2]] (w2, w3).
struct ApproxRMF {
  Polynomial a, b;
  RVF3 f1, f2, f3;
  double minimax_error = 0;
  /// max |f2' . f3| over the samples.
  double rmf_condition_error = 0;
};

/// Throws DenominatorRootInDomain when a and b share a real root in [0, 1].
ApproxRMF assemble_frame(const helix::RationalHelix& h, const Polynomial& a, const Polynomial& b,
                         int samples = 257);

/// max over [lo, hi] samples of |f2' . f3| computed from the exact frame derivative.
double rmf_condition_error(const ApproxRMF& frame, double lo = 0, double hi = 1, int samples = 257);

/// The same measure for the numerically rotated frame (cos theta, sin theta) built
/// from quadrature samples; theta' is taken by a five-point difference of theta.
double exact_frame_rmf_error(const helix::RationalHelix& h, const AngleFunction& theta, int samples = 257);

/// max |(a b' - a' b)/(a^2 + b^2) - cot(psi) |t'| / 2| over samples on [lo, hi].
double rrmf_residual_bridge(const helix::RationalHelix& h, const Polynomial& a, const Polynomial& b, double lo = 0,
                            double hi = 1, int samples = 257);

struct RmfPiece {
  double lo = 0, hi = 1;
  /// tan(phi/2) = u/v for the constant pre-rotation applied on this piece.
  Integer u = 0, v = 1;
  MinimaxResult fit;
  ApproxRMF frame;
};

struct RmfApproximation {
  AngleFunction theta;
  std::vector<RmfPiece> pieces;
};

/// Minimax (m, k) approximation of tan(theta/2) and the rational frame it induces.
/// When |theta| comes close to pi the interval is bisected and each piece
/// approximates tan((theta - phi)/2) about a rational pre-rotation phi, recombined
/// exactly into a single pair (a, b) per piece.
RmfApproximation approximate_rmf(const helix::RationalHelix& h, int m, int k, double theta0 = 0,
                                 const MinimaxOptions& options = {}, double lo = 0, double hi = 1);

}  // namespace helixforge::rmf
