#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "helixforge/curves/rvf3.hpp"
#include "helixforge/field/numeric.hpp"
#include "helixforge/helix/helix.hpp"
#include "helixforge/rmf/frame.hpp"

namespace helixforge::surface {

using curves::RVF3;
using curves::Vec3;
using field::RatFun;
using field::SurdScalar;

enum class ProfileKind { Line, Polyline, RationalBezier };

/// Planar cross section c(s) = (c1(s), c2(s)) on [s0, s1].
class ProfileCurve {
 public:
  /// c1 = a1 s + b1, c2 = a2 s + b2.
  static ProfileCurve line(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2,
                           const Rational& s0 = 0, const Rational& s1 = 1);
  /// Piecewise linear through the points at uniformly spaced parameters.
  static ProfileCurve polyline(std::vector<std::array<Rational, 2>> points, const Rational& s0 = 0,
                               const Rational& s1 = 1);
  /// Rational Bezier of any degree on [0, 1] (reparametrized to [s0, s1]).
  static ProfileCurve rational_bezier(const std::vector<std::array<Rational, 2>>& control,
                                      const std::vector<Rational>& weights, const Rational& s0 = 0,
                                      const Rational& s1 = 1);
  /// Any pair of rational functions.
  static ProfileCurve rational(RatFun c1, RatFun c2, const Rational& s0 = 0, const Rational& s1 = 1);

  ProfileKind kind() const { return kind_; }
  const Rational& s0() const { return s0_; }
  const Rational& s1() const { return s1_; }
  std::size_t pieces() const { return c1_.size(); }
  /// Index of the piece used at s (the right-hand piece at interior breakpoints).
  std::size_t piece_at(double s) const;
  const RatFun& c1(std::size_t piece = 0) const { return c1_[piece]; }
  const RatFun& c2(std::size_t piece = 0) const { return c2_[piece]; }
  const std::vector<Rational>& breaks() const { return breaks_; }

 private:
  ProfileKind kind_ = ProfileKind::Line;
  Rational s0_ = 0, s1_ = 1;
  std::vector<Rational> breaks_;  // s0 = breaks[0] < ... < breaks[n] = s1
  std::vector<RatFun> c1_, c2_;
};

/// S(s, t) = r(t) + c1(s) f2(t) + c2(s) f3(t).
struct SweepSurface {
  RVF3 r, f2, f3;
  ProfileCurve profile = ProfileCurve::line(0, 0, 0, 0);
  Rational t0 = 0, t1 = 1;
};

SweepSurface sweep(const RVF3& spine, const RVF3& f2, const RVF3& f3, const ProfileCurve& profile,
                   const Rational& t0 = 0, const Rational& t1 = 1);
/// Sweep with the rational frame of one approximation piece. Throws DomainMismatch if
/// [t0, t1] is not inside the piece.
SweepSurface sweep(const helix::RationalHelix& spine, const rmf::RmfPiece& piece, const ProfileCurve& profile,
                   const Rational& t0 = 0, const Rational& t1 = 1);
SweepSurface sweep(const helix::RationalHelix& spine, const rmf::ApproxRMF& frame, const ProfileCurve& profile,
                   const Rational& t0 = 0, const Rational& t1 = 1);
/// Sweep with the Frenet-aligned helix basis (w2, w3).
SweepSurface sweep_fsf(const helix::RationalHelix& spine, const ProfileCurve& profile, const Rational& t0 = 0,
                       const Rational& t1 = 1);

/// First and second fundamental forms. L, M, N are taken against the unnormalized
/// normal S_s x S_t, so K = (LN - M^2)/(EG - F^2)^2.
template <class T>
struct Forms {
  T E, F, G, L, M, N;
  T K() const { return (L * N - M * M) / ((E * G - F * F) * (E * G - F * F)); }
};

/// Exact surface point at rational parameters.
Vec3 evaluate(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t);
/// Exact forms at rational parameters. Throws SingularPoint when EG - F^2 = 0.
Forms<SurdScalar> forms_exact(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t);
SurdScalar gauss_curvature_exact(const SweepSurface& S, const SurdScalar& s, const SurdScalar& t);

/// Precompiled high-precision evaluator of the exact symbolic partials.
class SurfaceEvaluator {
 public:
  explicit SurfaceEvaluator(const SweepSurface& S);

  struct Column {  // spine and frame data at one t
    std::array<std::array<Real, 3>, 3> r, f2, f3;  // value, first, second derivative
  };
  Column column(const Real& t) const;

  curves::RealVec point(const Column& col, const Real& s) const;
  /// Throws SingularPoint when EG - F^2 <= 1e-40 (E G) at working precision.
  Forms<Real> forms(const Column& col, const Real& s) const;

  curves::RealVec point(const Real& s, const Real& t) const { return point(column(t), s); }
  Real gauss_curvature(const Real& s, const Real& t) const { return forms(column(t), s).K(); }
  Real mean_curvature(const Real& s, const Real& t) const;

  const SweepSurface& surface() const { return S_; }

 private:
  struct Profile {
    std::array<field::NumericRatFun<Real>, 3> c1, c2;
  };
  void check_domain(const Real& s, const Real& t) const;

  SweepSurface S_;
  std::array<std::array<field::NumericRatFun<Real>, 3>, 3> r_, f2_, f3_;  // [derivative][component]
  std::vector<Profile> profile_;
};

enum class Exec { Serial, Parallel };

/// K on the uniform grid s_i = s0 + i (s1 - s0)/(ns - 1), t_j likewise, t-major.
struct CurvatureGrid {
  int ns = 0, nt = 0;
  std::vector<double> s, t;
  std::vector<double> K;  // index j * ns + i
  std::vector<unsigned char> singular;
  double k_min = 0, k_max = 0, abs_max = 0;
  double s_at_min = 0, t_at_min = 0, s_at_max = 0, t_at_max = 0;
  int regular = 0;
};
CurvatureGrid curvature_grid(const SweepSurface& S, int ns, int nt, Exec exec = Exec::Parallel);
CurvatureGrid curvature_grid(const SurfaceEvaluator& ev, int ns, int nt, Exec exec = Exec::Parallel);

struct Mesh {
  int ns = 0, nt = 0;
  std::vector<double> s, t;
  std::vector<std::array<double, 3>> vertices;  // index j * ns + i
  std::vector<std::array<std::size_t, 4>> quads;  // zero-based
  std::vector<unsigned char> degenerate_quads;
  std::optional<std::vector<double>> K;
  std::vector<unsigned char> singular;
};
/// Throws DomainMismatch when ns or nt < 2.
Mesh sample_mesh(const SweepSurface& S, int ns, int nt, bool with_curvature = true, Exec exec = Exec::Parallel);
Mesh sample_mesh(const SurfaceEvaluator& ev, int ns, int nt, bool with_curvature = true,
                 Exec exec = Exec::Parallel);

std::string to_obj(const Mesh& m);
std::string curvature_csv(const Mesh& m);
void write_obj(const Mesh& m, const std::filesystem::path& path);
void write_curvature_csv(const Mesh& m, const std::filesystem::path& path);

}  // namespace helixforge::surface
