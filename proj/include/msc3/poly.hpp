#pragma once

// Dense univariate polynomials over Scalar, used by the classifier to express
// how a matrix entry depends on one residual move parameter.  Degrees stay
// tiny (<= 4), so no attempt at asymptotic cleverness.

#include "msc3/field.hpp"

#include <vector>

namespace msc3 {

struct Poly {
  std::vector<Scalar> c;  // c[i] is the coefficient of u^i; no trailing zeros

  static Poly constant(const Field& f, Scalar v) {
    Poly p;
    if (!f.is_zero(v)) p.c.push_back(std::move(v));
    return p;
  }
  static Poly unknown(const Field& f) {
    Poly p;
    p.c = {f.zero(), f.one()};
    return p;
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Scalar coeff(const Field& f, int i) const {
    return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : f.zero();
  }
  void trim(const Field& f) {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  }
};

inline Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) r.c.push_back(f.add(a.coeff(f, static_cast<int>(i)), b.coeff(f, static_cast<int>(i))));
  r.trim(f);
  return r;
}
inline Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) r.c.push_back(f.sub(a.coeff(f, static_cast<int>(i)), b.coeff(f, static_cast<int>(i))));
  r.trim(f);
  return r;
}
inline Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  r.trim(f);
  return r;
}
inline Scalar poly_eval(const Field& f, const Poly& p, const Scalar& x) {
  Scalar r = f.zero();
  for (size_t i = p.c.size(); i-- > 0;) r = f.add(f.mul(r, x), p.c[i]);
  return r;
}

}  // namespace msc3
