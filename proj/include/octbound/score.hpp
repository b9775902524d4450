#pragma once

// Scoring of simplices, standard clusters and Delaunay stars, the density
// pieces of the octahedral bound, and the reapportioned Voronoi tips.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "octbound/geometry.hpp"

namespace octbound {

enum class ScoringMode { Compression, Voronoi };

std::string to_string(ScoringMode mode);

// Circumradius threshold above which a quasi-regular tetrahedron is scored
// by vor instead of compression.
inline constexpr double kVoronoiRadiusThreshold = 1.41;

// Mode for a small simplex that is not a quasi-regular tetrahedron. The
// maximal-compression policy: compression exactly when the edge conditions
// for the long-edge position allow it, Voronoi otherwise (including every
// simplex with two or more edges longer than 2.51).
ScoringMode compression_rule(const OrderedSimplex& s);

// The edge-length conditions alone, for a simplex whose only edge longer than
// 2.51 is `long_edge`.
bool compression_conditions_hold(const OrderedSimplex& s, int long_edge);

// Score at vertex i. Quasi-regular tetrahedra follow the radius rule and
// ignore `mode`; small simplices use `mode`. Other simplices are rejected.
double score_simplex(const OrderedSimplex& s, ScoringMode mode, int i = 0);

enum class ClusterKind { QuasiRegularTetrahedron, Other };

std::string to_string(ClusterKind kind);

struct ClusterEntry {
  OrderedSimplex simplex;
  SimplexClass cls;
  ScoringMode mode;
  bool in_octahedron = false;
};

// A standard cluster around the distinguished vertex v0 of each simplex.
class Cluster {
 public:
  Cluster(ClusterKind kind, std::vector<ClusterEntry> entries);

  // Classifies each simplex and assigns modes by compression_rule.
  static Cluster make(ClusterKind kind, const std::vector<OrderedSimplex>& simplices, bool octahedron = false);

  [[nodiscard]] ClusterKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<ClusterEntry>& entries() const { return entries_; }

 private:
  ClusterKind kind_;
  std::vector<ClusterEntry> entries_;
};

double score_cluster(const Cluster& c);

class Star {
 public:
  explicit Star(std::vector<Cluster> clusters);
  [[nodiscard]] const std::vector<Cluster>& clusters() const { return clusters_; }

 private:
  std::vector<Cluster> clusters_;
};

double score_star(const Star& d);

// Density pieces. Type 2 is a cone over a set at distance >= 1.18, type 3 a
// cone over a disk wedge at height h, type 4 a Rogers simplex R(a, b, sqrt 2).
struct PieceType1 {
  OrderedSimplex simplex;
};
struct PieceType2 {};
struct PieceType3 {
  double height = 1.0;
  double aperture = 1.0;
};
struct PieceType4 {
  double a = 1.0;
  double b = 1.0;
};
using DecompositionPiece = std::variant<PieceType1, PieceType2, PieceType3, PieceType4>;

inline constexpr double kPieceCutoff = 1.18;

// Ball-fraction density of the piece. For type 1 this is the fraction of the
// simplex covered by the unit balls at its vertices; it is <= delta_oct
// exactly when gamma(S) <= 0.
double piece_density(const DecompositionPiece& p);

// A quasi-regular tetrahedron (w, v0, v1, v2) whose face (v0, v1, v2) faces
// away from w.
struct TipGeometry {
  Vec3 w;
  std::array<Vec3, 3> v;
};

struct TipVolumes {
  std::array<double, 3> x{};           // vol(X_0), vol(X_1), vol(X_2)
  std::array<double, 3> correction{};  // A(v_0), A(v_1), A(v_2)
  double correction_w = 0.0;           // A(w)
};

// The tip is {x : |x-w| <= |x-v_i| for all i, x beyond the face plane}; X_i is
// the part of it nearer to v_i than to the other two face vertices.
TipVolumes tip_volumes(const TipGeometry& t);

// Splits a quasi-regular octahedron (six vertices) along its qualifying
// diagonal into four simplices; the first diagonal endpoint is the
// distinguished vertex and edge 1 is the diagonal.
std::array<OrderedSimplex, 4> octahedron_split(const std::array<Vec3, 6>& vertices);

}  // namespace octbound
