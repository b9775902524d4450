#pragma once

// Explicit bound Gamma(S) <= 0 on small neighborhoods of the two equality
// simplices S0 = S(2 sqrt2, 2, 2, 2, 2, 2) and S1 = S(2 sqrt2, 2, 2, 2 sqrt2, 2, 2).

#include <array>
#include <string>
#include <vector>

#include "octbound/geometry.hpp"
#include "octbound/interval_geometry.hpp"
#include "octbound/multipoly.hpp"

namespace octbound {

enum class ExceptionCenter { S0, S1 };

std::string to_string(ExceptionCenter c);
ExceptionCenter exception_center_from_string(const std::string& s);

OrderedSimplex center_simplex(ExceptionCenter c);

// Edges of the canonical placement that sit at 2 sqrt 2.
std::vector<int> long_edges_of(ExceptionCenter c);

// Per-edge deviation box around the canonical placement, clipped to
// [2, 2 sqrt 2]: long edges in [2 sqrt2 - r, 2 sqrt2], the rest in [2, 2 + r].
Box6 region_box(ExceptionCenter c, double radius);

// All edge placements of the region reachable by relabeling vertices.
std::vector<Box6> region_placements(ExceptionCenter c, double radius);

struct AppendixFrame {
  ExceptionCenter center = ExceptionCenter::S0;
  double radius = 0.0;
  std::array<Interval, 4> a0{};       // a_i at the center
  std::array<Interval, 4> b{};        // 2 / (3 (1 + t0^2 / a_i0^2))
  std::array<Interval, 4> a_minus{};  // rigorous lower bounds of a_i on the region
  Interval c0;                        // -delta_oct / 6 + sum b_i / a_i0
  Interval t0;                        // sqrt(Delta0) / 2
  Interval delta0;
};

AppendixFrame appendix_frame(ExceptionCenter c, double radius);

struct AppendixResult {
  bool verified = false;
  AppendixFrame frame;
  MultiPoly first_sum;   // sum b_i (a_i0 - a_i) / a_i0^2
  MultiPoly second_sum;  // sum b_i (a_i0 - a_i)^2 / (a_i0^2 a_i^-)
  std::array<double, 6> first_linear{};   // upper coefficients after monomial domination
  std::array<double, 6> second_linear{};
  Interval t_lower;                        // lower bound of t on the region
  double kappa = 0.0;                      // (t - t0) c0 <= kappa f4
  std::array<double, 6> final_linear{};    // Gamma <= sum final_linear[j] f_j (S0)
  double flat_margin = 0.0;                // c0 + positive linear part (S1)
  std::string detail;
};

// Upper linear majorant of p on [0, r]^6: negative monomials of degree >= 2
// are dropped, positive ones bounded by r^(deg-1) (f1 + ... + f6).
std::array<double, 6> dominate_linear(const MultiPoly& p, double r);

AppendixResult appendix_bound(ExceptionCenter c, double radius);

}  // namespace octbound
