#pragma once

#include <type_traits>
#include <vector>

#include "helixforge/field/ratfun.hpp"

namespace helixforge::field {

/// Coefficients of an exact polynomial converted once to T (double or Real) for
/// repeated Horner evaluation in sampling loops.
template <class T>
struct NumericPoly {
  std::vector<T> c;

  NumericPoly() = default;
  explicit NumericPoly(const Polynomial& p) {
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) {
      if constexpr (std::is_same_v<T, double>)
        c.push_back(x.to_double());
      else
        c.push_back(T(x.to_real()));
    }
  }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

template <class T>
struct NumericRatFun {
  NumericPoly<T> num;
  NumericPoly<T> den;

  NumericRatFun() = default;
  explicit NumericRatFun(const RatFun& f) : num(f.num()), den(f.den()) {}

  T operator()(const T& x) const { return num(x) / den(x); }
};

}  // namespace helixforge::field
