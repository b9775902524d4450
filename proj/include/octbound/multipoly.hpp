#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "octbound/interval.hpp"

namespace octbound {

// Sparse polynomial in six variables f1..f6 with interval coefficients.
class MultiPoly {
 public:
  using Exponents = std::array<std::uint8_t, 6>;

  MultiPoly() = default;
  MultiPoly(const Interval& c);  // NOLINT: constants convert implicitly
  MultiPoly(double c) : MultiPoly(Interval(c)) {}

  static MultiPoly variable(int k);

  [[nodiscard]] const std::map<Exponents, Interval>& terms() const { return terms_; }
  [[nodiscard]] int degree() const;
  [[nodiscard]] Interval constant_term() const;
  [[nodiscard]] MultiPoly without_constant() const;

  [[nodiscard]] Interval eval(const std::array<Interval, 6>& f) const;
  [[nodiscard]] double eval(const std::array<double, 6>& f) const;
  [[nodiscard]] std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(double s, const MultiPoly& a) { return MultiPoly(s) * a; }

 private:
  void add_term(const Exponents& e, const Interval& c);
  std::map<Exponents, Interval> terms_;
};

MultiPoly sqr(const MultiPoly& p);

int degree(const MultiPoly::Exponents& e);

}  // namespace octbound
