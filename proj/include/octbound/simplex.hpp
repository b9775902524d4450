#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace octbound {

// Thrown when a geometric quantity is undefined for the given input
// (flat simplex, degenerate triangle, coplanar tip configuration, ...).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec3 a, Vec3 b) { return norm(a - b); }

// Edge numbering (0-based here): edges 0,1,2 join the distinguished vertex v0
// to v1,v2,v3; edge k+3 is opposite edge k, i.e. 3 = v2v3, 4 = v1v3, 5 = v1v2.
int edge_index(int i, int j);

// Vertex k is opposite face k; the face's three edges, in increasing order.
std::array<int, 3> face_edges(int k);

// Squared edge lengths x_i = y_i^2.
struct SquaredEdges {
  std::array<double, 6> x{};
};

// A tetrahedron given by its six edge lengths in the numbering above.
// Construction checks the face triangle inequalities and realizability
// (Delta >= 0, up to rounding); flat simplices are allowed.
class OrderedSimplex {
 public:
  explicit OrderedSimplex(const std::array<double, 6>& y);

  static OrderedSimplex regular(double edge = 2.0);

  [[nodiscard]] double y(int k) const { return y_[k]; }
  [[nodiscard]] const std::array<double, 6>& edges() const { return y_; }
  [[nodiscard]] SquaredEdges squared() const;
  [[nodiscard]] double min_edge() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const OrderedSimplex&, const OrderedSimplex&) = default;

 private:
  std::array<double, 6> y_;
};

// new vertex a corresponds to old vertex perm[a].
OrderedSimplex relabel(const OrderedSimplex& s, const std::array<int, 4>& perm);

// Edge permutation induced by a vertex relabeling: result[k] is the old edge
// that becomes new edge k.
std::array<int, 6> edge_permutation(const std::array<int, 4>& perm);

const std::array<std::array<int, 4>, 24>& vertex_permutations();

// Edge lengths of the simplex spanned by four points, p0 distinguished.
OrderedSimplex simplex_from_points(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3);

// Coordinates realizing the simplex: v0 at the origin, v1 on the x axis,
// v2 in the xy half-plane with y >= 0, v3 with z >= 0.
std::array<Vec3, 4> embed(const OrderedSimplex& s);

enum class SimplexKind { QuasiRegularTetrahedron, SmallNonQR, Other };

struct SimplexClass {
  SimplexKind kind = SimplexKind::Other;
  std::array<double, 4> face_circumradii{};  // indexed by opposite vertex
  std::vector<int> long_edges;               // edges longer than 2.51
};

std::string to_string(SimplexKind kind);

// Orthogonal-chain simplex with apex-to-edge-point distance a, apex-to-face
// circumcenter b and apex-to-circumcenter c.
struct RogersShape {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  RogersShape(double a_, double b_, double c_);
  [[nodiscard]] double volume() const;
};

}  // namespace octbound
