#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helixforge/curves/invariants.hpp"
#include "helixforge/curves/rvf3.hpp"
#include "helixforge/errors.hpp"

namespace helixforge::helix {

using curves::RVF3;
using curves::Vec3;
using field::Polynomial;
using field::RatFun;
using field::SurdScalar;

/// Axis data of a helix tangent indicatrix.
///
/// D is the primitive integer vector parallel to t' x t'' (same orientation as
/// t' x t'' at t = 1/2), d = D.D and c = t.D. The unit axis u = D/sqrt(d) and
/// cos psi = c/sqrt(d) live in Q(sqrt(d)); the curve data lives in Q(sqrt(e))
/// with e the squarefree part of d - c^2.
struct AxisAngle {
  Vec3 direction;
  Rational c;
  Rational d;
  Rational e_prime;  ///< d - c^2 = d sin^2 psi
  std::int64_t e = 0;
  Vec3 u;
  SurdScalar cos_psi;
  Rational sin2_psi;
  SurdScalar sqrt_e_prime;  ///< sqrt(d - c^2) in Q(sqrt(e))
};

struct HelixBasis {
  AxisAngle axis;
  RVF3 w1, w2, w3;
};

struct RationalHelix {
  RVF3 r;
  RVF3 t;
  HelixBasis basis;
  RatFun a1, a2, a3;
  RatFun sigma;
  /// Torsion times speed, c det(D, t, t') / (d - c^2); rational.
  RatFun tau_sigma;
  std::vector<double> cusps;
  Warnings warnings;
};

/// Throws NotHelical, PlanarCurve or DegenerateAngle.
AxisAngle axis_and_angle(const RVF3& t);
HelixBasis helix_basis(const RVF3& t, const AxisAngle& axis);
/// tau sigma = c det(D, t, t') / (d - c^2), an exact rational function.
RatFun torsion_speed(const RVF3& t, const AxisAngle& axis);
RationalHelix helix_from_a3(const RatFun& a3, const RVF3& t);

struct HelixReport {
  bool is_helix = false;
  bool planar = false;
  bool exact = false;
  Real tau_over_kappa = 0;
  Real max_spread = 0;
  Real axis_residual = 0;
};

/// Constant-ratio test. Exact when the curvature is an exact rational function,
/// otherwise over 64 samples with spread tolerance 1e-20.
HelixReport helix_verify(const RVF3& r);

/// (a b' - a' b)/(a^2 + b^2) - tau sigma / 2. Zero exactly when the frame rotating
/// (w2, w3) by tan(theta/2) = a/b is rotation minimizing. Throws NotCoprime.
RatFun rrmf_check(const RationalHelix& h, const Polynomial& a, const Polynomial& b);

struct RrmfSearchResult {
  bool feasible = false;
  bool planar = false;
  Polynomial a, b;
  /// Exact right-hand side of the RRMF condition for the normal form tangent.
  RatFun rhs;
  /// (k+ - k-)^2 forced by partial fractions: must be a perfect integer square.
  Rational winding_square;
  std::vector<std::string> certificate;
};

/// RRMF search for the quadratic tangent b1 = m t, b2 = n with polynomials a, b of
/// degree at most max_deg.
RrmfSearchResult rrmf_degree2_search(const Rational& m, const Rational& n, int max_deg);

}  // namespace helixforge::helix
