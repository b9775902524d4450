#pragma once

// Double-precision closed forms for a simplex given by its six edge lengths.
// Lengths are in units of the sphere radius, so touching spheres are 2 apart.

#include "octbound/simplex.hpp"

namespace octbound {

// Density of the regular octahedron, (-3 pi + 12 arccos(1/sqrt 3)) / sqrt 8.
double delta_oct();

// The score unit: compression of the regular tetrahedron of edge 2.
double pt();

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kTwoSqrt2 = 2.8284271247461903;
inline constexpr double kCloseNeighbor = 2.51;

// Cayley-Menger polynomial in squared edges, normalized so volume = sqrt(Delta)/12.
double delta(const SquaredEdges& x);

// The a-function at vertex i (0..3); the solid angle there is 2 atan(sqrt(Delta) / (2 a_i)).
double a_vertex(const OrderedSimplex& s, int i);

// Circumradius of a triangle; +infinity for a degenerate triangle.
double eta(double p, double q, double r);

// Face circumradius, faces indexed by opposite vertex.
double face_eta(const OrderedSimplex& s, int opposite_vertex);

// Throws DegenerateError for a flat simplex.
double circumradius(const OrderedSimplex& s);

double volume(const OrderedSimplex& s);

// Steradians. Throws std::domain_error when a_i <= 0 (solid angle >= 2 pi
// branch, never reached with edges in [2, 2 sqrt 2]).
double solid_angle(const OrderedSimplex& s, int i);

// Dihedral angle along edge 1, from an explicit coordinate embedding.
double dihedral(const OrderedSimplex& s);

// Compression: -delta_oct vol(S) + vol(S cap B). Requires every edge >= 2 so
// the unit balls at the vertices are disjoint.
double gamma(const OrderedSimplex& s);

// Analytic continuation of 4 (-delta_oct vol(Voronoi piece at i) + sol_i / 3)
// through the signed decomposition into six Rogers simplices.
double vor_analytic(const OrderedSimplex& s, int i);

// Signed volume of the part of S nearer to vertex i than to the other vertices.
double voronoi_volume(const OrderedSimplex& s, int i);

// Density of a unit ball at the apex of R(a, b, c); requires 1 <= a <= b <= c
// and positive volume.
double rogers_density(double a, double b, double c);

SimplexClass classify(const OrderedSimplex& s);

}  // namespace octbound
