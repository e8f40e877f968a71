#include "helixforge/field/polynomial.hpp"

#include <algorithm>

#include "helixforge/errors.hpp"

namespace helixforge::field {

Polynomial::Polynomial(const SurdScalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<SurdScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, const SurdScalar& c) {
  std::vector<SurdScalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SurdScalar Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return SurdScalar();
  return c_[static_cast<std::size_t>(i)];
}

SurdScalar Polynomial::leading() const {
  if (c_.empty()) return SurdScalar();
  return c_.back();
}

std::int64_t Polynomial::discriminant() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return c.discriminant();
  return 0;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  SurdScalar inv = leading().inverse();
  Polynomial r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<SurdScalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * SurdScalar(static_cast<long>(i));
  return Polynomial(std::move(d));
}

SurdScalar Polynomial::operator()(const SurdScalar& x) const {
  SurdScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Real Polynomial::evaluate(const Real& x) const {
  Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_real();
  return acc;
}

std::optional<Polynomial> Polynomial::sqrt(std::int64_t hint_e) const {
  if (is_zero()) return Polynomial();
  if (degree() % 2 != 0) return std::nullopt;
  std::int64_t e = discriminant();
  if (e == 0) e = hint_e;
  auto lead = leading().sqrt(e);
  if (!lead) return std::nullopt;
  // Top-down coefficient recursion: q_n = sqrt(p_2n); q_{n-k} from the t^{2n-k} term.
  const int n = degree() / 2;
  std::vector<SurdScalar> q(static_cast<std::size_t>(n) + 1);
  q[static_cast<std::size_t>(n)] = *lead;
  SurdScalar two_lead_inv = (SurdScalar(2) * *lead).inverse();
  for (int k = 1; k <= n; ++k) {
    SurdScalar acc = coefficient(2 * n - k);
    for (int j = 1; j < k; ++j)
      acc -= q[static_cast<std::size_t>(n - j)] * q[static_cast<std::size_t>(n - k + j)];
    q[static_cast<std::size_t>(n - k)] = acc * two_lead_inv;
  }
  Polynomial root(std::move(q));
  if (root * root != *this) return std::nullopt;
  return root;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<SurdScalar> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const SurdScalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<SurdScalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  SurdScalar inv = b.leading().inverse();
  std::vector<SurdScalar> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    SurdScalar coef = rem[static_cast<std::size_t>(k + db)] * inv;
    quot[static_cast<std::size_t>(k)] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= coef * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0)");
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result(1);
  Polynomial base = p;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

}  // namespace helixforge::field
