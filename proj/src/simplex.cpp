#include "octbound/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "octbound/formulas.hpp"

namespace octbound {

int edge_index(int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) throw std::out_of_range("edge_index: bad vertex pair");
  return formulas::edge_of(i, j);
}

std::array<int, 3> face_edges(int k) {
  switch (k) {
    case 0:
      return {3, 4, 5};
    case 1:
      return {1, 2, 3};
    case 2:
      return {0, 2, 4};
    case 3:
      return {0, 1, 5};
    default:
      throw std::out_of_range("face_edges: vertex index must be 0..3");
  }
}

namespace {

bool triangle_ok(double a, double b, double c) {
  constexpr double kSlack = 1e-12;
  const double scale = a + b + c;
  return a + b >= c - kSlack * scale && b + c >= a - kSlack * scale && a + c >= b - kSlack * scale;
}

}  // namespace

OrderedSimplex::OrderedSimplex(const std::array<double, 6>& y) : y_(y) {
  for (double v : y_)
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("OrderedSimplex: edge lengths must be positive");
  for (int k = 0; k < 4; ++k) {
    const auto e = face_edges(k);
    if (!triangle_ok(y_[e[0]], y_[e[1]], y_[e[2]]))
      throw std::invalid_argument("OrderedSimplex: face violates the triangle inequality: " + to_string());
  }
  const SquaredEdges x = squared();
  const double d = formulas::delta(x.x);
  const double scale = std::pow(*std::max_element(x.x.begin(), x.x.end()), 3);
  if (d < -1e-12 * scale) throw std::invalid_argument("OrderedSimplex: edge lengths not realizable in 3-space: " + to_string());
}

OrderedSimplex OrderedSimplex::regular(double edge) { return OrderedSimplex({edge, edge, edge, edge, edge, edge}); }

SquaredEdges OrderedSimplex::squared() const {
  SquaredEdges out;
  for (int k = 0; k < 6; ++k) out.x[k] = y_[k] * y_[k];
  return out;
}

double OrderedSimplex::min_edge() const { return *std::min_element(y_.begin(), y_.end()); }

std::string OrderedSimplex::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "S(";
  for (int k = 0; k < 6; ++k) os << (k ? "," : "") << y_[k];
  os << ")";
  return os.str();
}

std::array<int, 6> edge_permutation(const std::array<int, 4>& perm) {
  std::array<int, 6> out{};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out[formulas::edge_of(a, b)] = formulas::edge_of(perm[a], perm[b]);
  return out;
}

OrderedSimplex relabel(const OrderedSimplex& s, const std::array<int, 4>& perm) {
  const auto ep = edge_permutation(perm);
  std::array<double, 6> y{};
  for (int k = 0; k < 6; ++k) y[k] = s.y(ep[k]);
  return OrderedSimplex(y);
}

const std::array<std::array<int, 4>, 24>& vertex_permutations() {
  static const auto perms = [] {
    std::array<std::array<int, 4>, 24> out{};
    std::array<int, 4> p{0, 1, 2, 3};
    int n = 0;
    do {
      out[n++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

OrderedSimplex simplex_from_points(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3) {
  return OrderedSimplex({dist(p0, p1), dist(p0, p2), dist(p0, p3), dist(p2, p3), dist(p1, p3), dist(p1, p2)});
}

std::array<Vec3, 4> embed(const OrderedSimplex& s) {
  const double y1 = s.y(0);
  const double y2 = s.y(1);
  const double y3 = s.y(2);
  const double y4 = s.y(3);
  const double y5 = s.y(4);
  const double y6 = s.y(5);
  const Vec3 v0{};
  const Vec3 v1{y1, 0.0, 0.0};
  const double px2 = (y1 * y1 + y2 * y2 - y6 * y6) / (2.0 * y1);
  const double py2 = std::sqrt(std::max(0.0, y2 * y2 - px2 * px2));
  const Vec3 v2{px2, py2, 0.0};
  if (py2 == 0.0) throw DegenerateError("embed: face v0 v1 v2 is degenerate");
  const double px3 = (y1 * y1 + y3 * y3 - y5 * y5) / (2.0 * y1);
  const double py3 = (y3 * y3 - y4 * y4 + y2 * y2 - 2.0 * px3 * px2) / (2.0 * py2);
  const double pz3 = std::sqrt(std::max(0.0, y3 * y3 - px3 * px3 - py3 * py3));
  return {v0, v1, v2, Vec3{px3, py3, pz3}};
}

std::string to_string(SimplexKind kind) {
  switch (kind) {
    case SimplexKind::QuasiRegularTetrahedron:
      return "quasi-regular-tetrahedron";
    case SimplexKind::SmallNonQR:
      return "small";
    case SimplexKind::Other:
      return "other";
  }
  return "other";
}

RogersShape::RogersShape(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a > 0.0 && a <= b && b <= c)) throw PreconditionError("RogersShape requires 0 < a <= b <= c");
}

double RogersShape::volume() const { return a * std::sqrt(b * b - a * a) * std::sqrt(c * c - b * b) / 6.0; }

}  // namespace octbound
