#pragma once

// Outward-rounded interval arithmetic over IEEE doubles.
//
// Each endpoint is computed in round-to-nearest and then corrected by one ulp
// only when an error-free transformation (TwoSum, fma residual) shows that the
// rounded value landed on the wrong side of the exact result. Exact operations
// therefore return exact endpoints, and no floating-point environment state is
// touched, so intervals can be used from any thread.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace octbound {

namespace rounding {

inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

// Sign of (a + b) - fl(a + b), via Knuth's TwoSum.
inline double add_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return add_error(a, b, s) < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  return add_error(a, b, s) > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

// The fma residual is exact unless the product underflows; near zero we fall
// back to a one-ulp step, which is always safe.
inline bool tiny(double p) { return std::fabs(p) < 1e-290; }

inline double mul_down(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (tiny(p)) return (a == 0.0 || b == 0.0) ? 0.0 : next_down(p);
  return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  if (tiny(p)) return (a == 0.0 || b == 0.0) ? 0.0 : next_up(p);
  return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

// a/b - q has the sign of r/b where r = a - q*b is exact.
inline double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (tiny(q)) return a == 0.0 ? 0.0 : next_down(q);
  const double r = std::fma(-q, b, a);
  return (b > 0.0 ? r < 0.0 : r > 0.0) ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  if (tiny(q)) return a == 0.0 ? 0.0 : next_up(q);
  const double r = std::fma(-q, b, a);
  return (b > 0.0 ? r > 0.0 : r < 0.0) ? next_up(q) : q;
}

inline double sqrt_down(double x) {
  const double s = std::sqrt(x);
  if (s == 0.0 || !std::isfinite(s)) return s;
  return std::fma(-s, s, x) < 0.0 ? next_down(s) : s;
}

inline double sqrt_up(double x) {
  const double s = std::sqrt(x);
  if (s == 0.0 || !std::isfinite(s)) return s;
  return std::fma(-s, s, x) > 0.0 ? next_up(s) : s;
}

// libm transcendental results are not guaranteed to be correctly rounded.
inline constexpr int kLibmPadUlps = 2;

inline double pad_down(double x) {
  for (int i = 0; i < kLibmPadUlps; ++i) x = next_down(x);
  return x;
}

inline double pad_up(double x) {
  for (int i = 0; i < kLibmPadUlps; ++i) x = next_up(x);
  return x;
}

}  // namespace rounding

class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: points convert implicitly
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi or NaN endpoint");
  }

  static Interval hull(double a, double b) { return a <= b ? Interval(a, b) : Interval(b, a); }

  [[nodiscard]] constexpr double lo() const { return lo_; }
  [[nodiscard]] constexpr double hi() const { return hi_; }
  [[nodiscard]] double mid() const { return lo_ + 0.5 * (hi_ - lo_); }
  [[nodiscard]] double width() const { return hi_ - lo_; }
  [[nodiscard]] bool is_point() const { return lo_ == hi_; }

  [[nodiscard]] bool contains(double v) const { return lo_ <= v && v <= hi_; }
  [[nodiscard]] bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  [[nodiscard]] bool subset_of(const Interval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  [[nodiscard]] bool certainly_positive() const { return lo_ > 0.0; }
  [[nodiscard]] bool certainly_negative() const { return hi_ < 0.0; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

inline Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

inline Interval operator+(const Interval& a, const Interval& b) {
  return {rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi())};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo())};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  using namespace rounding;
  if (a.lo() >= 0.0 && b.lo() >= 0.0) return {mul_down(a.lo(), b.lo()), mul_up(a.hi(), b.hi())};
  const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()), mul_down(a.hi(), b.lo()),
                              mul_down(a.hi(), b.hi())});
  const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()), mul_up(a.hi(), b.lo()),
                              mul_up(a.hi(), b.hi())});
  return {lo, hi};
}

inline Interval operator/(const Interval& a, const Interval& b) {
  using namespace rounding;
  if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing zero");
  const double lo = std::min({div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi()), div_down(a.hi(), b.lo()),
                              div_down(a.hi(), b.hi())});
  const double hi = std::max({div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi()), div_up(a.hi(), b.lo()),
                              div_up(a.hi(), b.hi())});
  return {lo, hi};
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

inline Interval sqr(const Interval& a) {
  using namespace rounding;
  if (a.lo() >= 0.0) return {mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi())};
  if (a.hi() <= 0.0) return {mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo())};
  return {0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi()))};
}

// A partly negative argument is clamped at zero: callers only take roots of
// quantities that are nonnegative on the realizable part of the box.
inline Interval sqrt(const Interval& a) {
  if (a.hi() < 0.0) throw std::domain_error("Interval sqrt of a negative interval");
  const double lo = a.lo() <= 0.0 ? 0.0 : rounding::sqrt_down(a.lo());
  return {lo, rounding::sqrt_up(a.hi())};
}

inline Interval atan(const Interval& a) {
  return {rounding::pad_down(std::atan(a.lo())), rounding::pad_up(std::atan(a.hi()))};
}

// Smallest interval containing pi: the two doubles adjacent to it.
inline Interval pi_interval() { return {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1}; }

inline Interval acos(const Interval& a) {
  if (a.lo() < -1.0 || a.hi() > 1.0) throw std::domain_error("Interval acos outside [-1, 1]");
  const double lo = std::max(0.0, rounding::pad_down(std::acos(a.hi())));
  const double hi = std::min(pi_interval().hi(), rounding::pad_up(std::acos(a.lo())));
  return {lo, hi};
}

// atan(x)/x for x >= 0, extended by 1 at 0; decreasing on [0, inf).
inline Interval atan_over_x(const Interval& x) {
  using namespace rounding;
  if (x.lo() < 0.0) throw std::domain_error("atan_over_x expects a nonnegative interval");
  auto down = [](double v) { return v == 0.0 ? 1.0 : div_down(pad_down(std::atan(v)), v); };
  auto up = [](double v) { return v == 0.0 ? 1.0 : std::min(1.0, div_up(pad_up(std::atan(v)), v)); };
  return {down(x.hi()), up(x.lo())};
}

inline Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

inline Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

std::string to_string(const Interval& a);

}  // namespace octbound
