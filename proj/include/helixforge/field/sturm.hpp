#pragma once

#include <vector>

#include "helixforge/field/polynomial.hpp"

namespace helixforge::field {

/// Sturm chain of the squarefree part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Number of distinct real roots in the closed interval [lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const;

 private:
  int sign_changes(const Rational& x) const;
  std::vector<Polynomial> chain_;
};

struct RootInterval {
  Rational lo;
  Rational hi;
  double approx() const;
};

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
inline bool has_root_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  return count_roots(p, lo, hi) > 0;
}

/// Disjoint intervals, each holding exactly one distinct root of p in [lo, hi],
/// bisected until narrower than width.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width = Rational(1, 1u << 30));

}  // namespace helixforge::field
