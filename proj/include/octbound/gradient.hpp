#pragma once

// Forward-mode derivatives with interval components: value and gradient of a
// function of the six box variables, both enclosed over the whole box. Used
// for mean-value and monotonicity refinements of enclosures.

#include <array>

#include "octbound/interval.hpp"

namespace octbound {

class Grad {
 public:
  Grad() = default;
  Grad(double c) : v(c) { d.fill(Interval(0.0)); }  // NOLINT
  Grad(const Interval& c) : v(c) { d.fill(Interval(0.0)); }  // NOLINT

  static Grad variable(const Interval& value, int k) {
    Grad g(value);
    g.d[k] = Interval(1.0);
    return g;
  }

  Interval v;
  std::array<Interval, 6> d{};

  friend Grad operator+(const Grad& a, const Grad& b) {
    Grad r(a.v + b.v);
    for (int k = 0; k < 6; ++k) r.d[k] = a.d[k] + b.d[k];
    return r;
  }
  friend Grad operator-(const Grad& a, const Grad& b) {
    Grad r(a.v - b.v);
    for (int k = 0; k < 6; ++k) r.d[k] = a.d[k] - b.d[k];
    return r;
  }
  friend Grad operator-(const Grad& a) {
    Grad r(-a.v);
    for (int k = 0; k < 6; ++k) r.d[k] = -a.d[k];
    return r;
  }
  friend Grad operator*(const Grad& a, const Grad& b) {
    Grad r(a.v * b.v);
    for (int k = 0; k < 6; ++k) r.d[k] = a.d[k] * b.v + a.v * b.d[k];
    return r;
  }
  friend Grad operator/(const Grad& a, const Grad& b) {
    const Interval q = a.v / b.v;
    Grad r(q);
    for (int k = 0; k < 6; ++k) r.d[k] = (a.d[k] - q * b.d[k]) / b.v;
    return r;
  }
  Grad& operator+=(const Grad& o) { return *this = *this + o; }
  Grad& operator-=(const Grad& o) { return *this = *this - o; }
  Grad& operator*=(const Grad& o) { return *this = *this * o; }
  Grad& operator/=(const Grad& o) { return *this = *this / o; }
};

inline Grad sqr(const Grad& a) {
  Grad r(sqr(a.v));
  const Interval two_v = 2.0 * a.v;
  for (int k = 0; k < 6; ++k) r.d[k] = two_v * a.d[k];
  return r;
}

// Requires a strictly positive argument; the caller checks.
inline Grad sqrt(const Grad& a) {
  if (!(a.v.lo() > 0.0)) throw std::domain_error("Grad sqrt needs a positive argument");
  const Interval s = sqrt(a.v);
  Grad r(s);
  const Interval twice = 2.0 * s;
  for (int k = 0; k < 6; ++k) r.d[k] = a.d[k] / twice;
  return r;
}

inline Grad atan(const Grad& a) {
  Grad r(atan(a.v));
  const Interval den = 1.0 + sqr(a.v);
  for (int k = 0; k < 6; ++k) r.d[k] = a.d[k] / den;
  return r;
}

inline const Interval& value_of(const Interval& a) { return a; }
inline const Interval& value_of(const Grad& a) { return a.v; }

}  // namespace octbound
