#pragma once

// Shared test data: the worked examples and random instance generators.

#include <optional>
#include <random>

#include "helixforge/curves/construct.hpp"
#include "helixforge/helix/helix.hpp"

namespace helixforge::testing {

using curves::RVF3;
using field::Polynomial;
using field::RatFun;
using field::SurdScalar;

inline Polynomial poly(std::initializer_list<long> c) {
  std::vector<SurdScalar> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

inline Polynomial rpoly(std::initializer_list<Rational> c) {
  std::vector<SurdScalar> v;
  for (const auto& x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

inline RVF3 example1_tangent() {
  return curves::stereographic_tangent(RatFun(rpoly({1, Rational(-1, 2)})), RatFun(poly({-1, 2})));
}

inline RatFun example1_a3() { return curves::rational_bezier3(1, 2, -3, Rational(1, 2), 3, 1); }

inline RVF3 example2_tangent() {
  return curves::stereographic_tangent(RatFun(poly({1, -3})), RatFun(poly({3, 2})));
}

/// Coefficient along the unit binormal-type vector w3.
inline RatFun example2_a3() { return RatFun(poly({0, 1, 1, 1}), poly({11, 6, 13})); }

/// The same curve's coefficient along t x t' (not unit): the helix a3 divided by |t'|.
inline RatFun example2_a3_general() {
  return RatFun(Polynomial({SurdScalar(0), SurdScalar(0, Rational(1, 26), 13), SurdScalar(0, Rational(1, 26), 13),
                            SurdScalar(0, Rational(1, 26), 13)}));
}

inline RVF3 example2_curve() {
  RatFun k(SurdScalar(0, Rational(1, 286), 13));  // 1/(22 sqrt 13)
  return RVF3(k * RatFun(poly({5, 6, -9})), k * RatFun(poly({4, 18, 6})), k * RatFun(poly({6, 27, 9, 13})));
}

inline RVF3 example3_tangent() { return curves::stereographic_tangent(RatFun(1), RatFun(poly({0, -2}))); }

inline RVF3 example4_tangent() {
  return curves::stereographic_tangent(RatFun(poly({0, 1})), RatFun(poly({-1, 1})));
}

inline RatFun example4_a3() {
  return curves::rational_bezier3(1, 2, 0, 0, Rational(1, 2), 1);
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-9, 9);
  std::uniform_int_distribution<long> d(1, 4);
  return Rational(n(rng), d(rng));
}

inline RVF3 random_poly_field(std::mt19937_64& rng, int deg) {
  auto p = [&] {
    std::vector<SurdScalar> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(small_rational(rng));
    return RatFun(Polynomial(std::move(c)));
  };
  RatFun x = p(), y = p(), z = p();
  return RVF3(x, y, z);
}

inline curves::Bezier3 random_bezier(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> wn(1, 8);
  curves::Bezier3 b;
  for (auto& c : b.c) c = small_rational(rng);
  b.w1 = Rational(wn(rng), wn(rng));
  b.w2 = Rational(wn(rng), wn(rng));
  return b;
}

struct PHInstance {
  RatFun b1, b2;
  RVF3 v;
  RatFun a3;
};

/// Linear b's and a random cubic rational Bezier a3; nullopt for degenerate draws.
inline std::optional<PHInstance> random_ph_instance(std::mt19937_64& rng) {
  RatFun b1(rpoly({small_rational(rng), small_rational(rng)}));
  RatFun b2(rpoly({small_rational(rng), small_rational(rng)}));
  try {
    RVF3 v = curves::stereographic_tangent(b1, b2);
    RVF3 v1 = v.derivative();
    if (curves::triple_det(v, v1, v1.derivative()).is_zero()) return std::nullopt;
    RatFun a3 = random_bezier(rng).to_ratfun();
    if (a3.derivative().is_zero()) return std::nullopt;
    return PHInstance{b1, b2, v, a3};
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Rational helix from linear b's and a random cubic a3; nullopt for degenerate draws.
inline std::optional<helix::RationalHelix> random_helix(std::mt19937_64& rng) {
  auto inst = random_ph_instance(rng);
  if (!inst) return std::nullopt;
  try {
    helix::RationalHelix h = helix::helix_from_a3(inst->a3, inst->v);
    if (h.r.derivative().is_zero()) return std::nullopt;
    return h;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace helixforge::testing
