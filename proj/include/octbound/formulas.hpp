#pragma once

// Closed-form polynomial and rational pieces of simplex geometry, written once
// and instantiated for double and Interval. Everything here is in squared edge
// lengths unless stated otherwise.

#include <array>

#include "octbound/interval.hpp"

namespace octbound::formulas {

inline double sqr(double v) { return v * v; }
using octbound::sqr;

template <class T>
using Six = std::array<T, 6>;

// Normalized so that volume = sqrt(Delta) / 12.
template <class T>
T delta(const Six<T>& x) {
  const T& x1 = x[0];
  const T& x2 = x[1];
  const T& x3 = x[2];
  const T& x4 = x[3];
  const T& x5 = x[4];
  const T& x6 = x[5];
  return x1 * x4 * (-x1 + x2 + x3 - x4 + x5 + x6) + x2 * x5 * (x1 - x2 + x3 + x4 - x5 + x6) +
         x3 * x6 * (x1 + x2 - x3 + x4 + x5 - x6) - x2 * x3 * x4 - x1 * x3 * x5 - x1 * x2 * x6 - x4 * x5 * x6;
}

// d Delta / d x_k, used for monotonicity arguments.
template <class T>
T delta_partial(const Six<T>& x, int k) {
  const T& x1 = x[0];
  const T& x2 = x[1];
  const T& x3 = x[2];
  const T& x4 = x[3];
  const T& x5 = x[4];
  const T& x6 = x[5];
  switch (k) {
    case 0:
      return x4 * (-x1 + x2 + x3 - x4 + x5 + x6) - x1 * x4 + x2 * x5 + x3 * x6 - x3 * x5 - x2 * x6;
    case 1:
      return x5 * (x1 - x2 + x3 + x4 - x5 + x6) - x2 * x5 + x1 * x4 + x3 * x6 - x3 * x4 - x1 * x6;
    case 2:
      return x6 * (x1 + x2 - x3 + x4 + x5 - x6) - x3 * x6 + x1 * x4 + x2 * x5 - x2 * x4 - x1 * x5;
    case 3:
      return x1 * (-x1 + x2 + x3 - x4 + x5 + x6) - x1 * x4 + x2 * x5 + x3 * x6 - x2 * x3 - x5 * x6;
    case 4:
      return x2 * (x1 - x2 + x3 + x4 - x5 + x6) - x2 * x5 + x1 * x4 + x3 * x6 - x1 * x3 - x4 * x6;
    default:
      return x3 * (x1 + x2 - x3 + x4 + x5 - x6) - x3 * x6 + x1 * x4 + x2 * x5 - x1 * x2 - x4 * x5;
  }
}

// The a-function in edge lengths y (not squared):
// a = y1 y2 y3 + y1 (y2^2+y3^2-y4^2)/2 + y2 (y1^2+y3^2-y5^2)/2 + y3 (y1^2+y2^2-y6^2)/2.
template <class T>
T a_function(const T& y1, const T& y2, const T& y3, const T& y4, const T& y5, const T& y6) {
  const T s1 = sqr(y1);
  const T s2 = sqr(y2);
  const T s3 = sqr(y3);
  return y1 * y2 * y3 + 0.5 * (y1 * (s2 + s3 - sqr(y4)) + y2 * (s1 + s3 - sqr(y5)) + y3 * (s1 + s2 - sqr(y6)));
}

// Edge-length permutations that put vertex i in the distinguished position.
inline constexpr std::array<std::array<int, 6>, 4> kVertexAPerm{{
    {0, 1, 2, 3, 4, 5},
    {0, 4, 5, 3, 1, 2},
    {3, 1, 5, 0, 4, 2},
    {3, 4, 2, 0, 1, 5},
}};

template <class T>
T a_vertex(const Six<T>& y, int i) {
  const auto& p = kVertexAPerm[i];
  return a_function(y[p[0]], y[p[1]], y[p[2]], y[p[3]], y[p[4]], y[p[5]]);
}

// 16 * area^2 of a triangle with squared sides p, q, r.
template <class T>
T heron16(const T& p, const T& q, const T& r) {
  return 2.0 * (p * q + q * r + r * p) - sqr(p) - sqr(q) - sqr(r);
}

// Squared circumradius of a triangle with squared sides p, q, r.
template <class T>
T eta_squared(const T& p, const T& q, const T& r) {
  return p * q * r / heron16(p, q, r);
}

// Squared edges of the face opposite vertex k.
template <class T>
std::array<T, 3> face_squares(const Six<T>& x, int k) {
  switch (k) {
    case 0:
      return {x[3], x[4], x[5]};
    case 1:
      return {x[1], x[2], x[3]};
    case 2:
      return {x[0], x[2], x[4]};
    default:
      return {x[0], x[1], x[5]};
  }
}

// Numerator of 24 V R squared: rad^2 = circum_numerator / (4 Delta).
template <class T>
T circum_numerator(const Six<T>& x) {
  return heron16(x[0] * x[3], x[1] * x[4], x[2] * x[5]);
}

// Vertex relabelings that move vertex k into position 1; new vertex a is old
// vertex perm[a]. Used to evaluate the circumcenter weight of any vertex with
// the same formula.
inline constexpr std::array<std::array<int, 6>, 4> kWeightEdgePerm{{
    // perm (1,0,2,3): edges (1,0),(1,2),(1,3),(2,3),(0,3),(0,2)
    {0, 5, 4, 3, 2, 1},
    // identity
    {0, 1, 2, 3, 4, 5},
    // perm (0,2,1,3): edges (0,2),(0,1),(0,3),(1,3),(2,3),(2,1)
    {1, 0, 2, 4, 3, 5},
    // perm (0,3,2,1): edges (0,3),(0,2),(0,1),(2,1),(3,1),(3,2)
    {2, 1, 0, 5, 4, 3},
}};

// Barycentric weight of vertex k in the circumcenter, times Delta / 2.
// Built from the Gram matrix of v1-v0, v2-v0, v3-v0 after relabeling.
template <class T>
T circum_weight_numerator(const Six<T>& x_in, int k) {
  const auto& p = kWeightEdgePerm[k];
  const T& x1 = x_in[p[0]];
  const T& x2 = x_in[p[1]];
  const T& x3 = x_in[p[2]];
  const T& x4 = x_in[p[3]];
  const T& x5 = x_in[p[4]];
  const T& x6 = x_in[p[5]];
  const T g12 = 0.5 * (x1 + x2 - x6);
  const T g13 = 0.5 * (x1 + x3 - x5);
  const T g23 = 0.5 * (x2 + x3 - x4);
  return (x2 * x3 - sqr(g23)) * x1 + (g13 * g23 - g12 * x3) * x2 + (g12 * g23 - g13 * x2) * x3;
}

inline constexpr int edge_of(int i, int j) {
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 5, 4}, {1, 5, -1, 3}, {2, 4, 3, -1}};
  return table[i][j];
}

// For vertex i and face k (k != i): sum over the two face edges at i of
// x_e (x_f + x_g - x_e), where f, g are the other two edges of the face.
// The Voronoi volume of vertex i is sum_k N_k P_ik / (12 sqrt(Delta) T_k)
// with N_k the circumcenter weight numerator and T_k = heron16 of face k.
template <class T>
T rogers_edge_sum(const Six<T>& x, int i, int k) {
  std::array<int, 2> others{};
  int n = 0;
  for (int j = 0; j < 4; ++j)
    if (j != i && j != k) others[n++] = j;
  auto term = [&](int j, int t) {
    const T& xe = x[edge_of(i, j)];
    return xe * (x[edge_of(i, t)] + x[edge_of(j, t)] - xe);
  };
  return term(others[0], others[1]) + term(others[1], others[0]);
}

}  // namespace octbound::formulas
