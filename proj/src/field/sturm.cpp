#include "helixforge/field/sturm.hpp"

#include <algorithm>

#include "helixforge/errors.hpp"

namespace helixforge::field {

namespace {

// Positive rescaling keeps every sign in the chain while taming coefficient growth.
Polynomial normalize_sign_preserving(const Polynomial& p) {
  if (p.is_zero()) return p;
  SurdScalar lc = p.leading();
  SurdScalar s = lc.sign() > 0 ? lc.inverse() : -lc.inverse();
  return p * s;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvariantViolation, "Sturm sequence of the zero polynomial");
  Polynomial sq = p;
  if (p.degree() > 0) {
    Polynomial g = gcd(p, p.derivative());
    if (g.degree() > 0) sq = exact_div(p, g);
  }
  chain_.push_back(normalize_sign_preserving(sq));
  if (sq.degree() <= 0) return;
  chain_.push_back(normalize_sign_preserving(sq.derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(normalize_sign_preserving(-r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int prev = 0;
  SurdScalar sx(x);
  for (const auto& q : chain_) {
    int s = q(sx).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (lo > hi) return 0;
  int n = count_half_open(lo, hi);
  if (chain_.front()(SurdScalar(lo)).is_zero()) ++n;
  return n;
}

double RootInterval::approx() const { return Rational((lo + hi) / 2).convert_to<double>(); }

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorKind::InvariantViolation, "root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmSequence(p).count(lo, hi);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width) {
  std::vector<RootInterval> out;
  if (p.is_zero() || p.degree() == 0 || lo > hi) return out;
  SturmSequence seq(p);
  if (p(SurdScalar(lo)).is_zero()) out.push_back({lo, lo});
  struct Job {
    Rational lo, hi;
    int n;  // roots in (lo, hi]
  };
  std::vector<Job> stack{{lo, hi, seq.count_half_open(lo, hi)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1 && j.hi - j.lo <= width) {
      out.push_back({j.lo, j.hi});
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    int left = seq.count_half_open(j.lo, mid);
    stack.push_back({mid, j.hi, j.n - left});
    stack.push_back({j.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace helixforge::field
