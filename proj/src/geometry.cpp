#include "octbound/geometry.hpp"

#include <limits>
#include <numbers>

#include "octbound/formulas.hpp"

namespace octbound {

double delta_oct() {
  static const double value =
      (-3.0 * std::numbers::pi + 12.0 * std::acos(1.0 / std::sqrt(3.0))) / std::sqrt(8.0);
  return value;
}

double pt() {
  static const double value = gamma(OrderedSimplex::regular(2.0));
  return value;
}

double delta(const SquaredEdges& x) { return formulas::delta(x.x); }

double a_vertex(const OrderedSimplex& s, int i) {
  if (i < 0 || i > 3) throw std::out_of_range("a_vertex: vertex index must be 0..3");
  return formulas::a_vertex(s.edges(), i);
}

double eta(double p, double q, double r) {
  const double h = (p + q + r) * (-p + q + r) * (p - q + r) * (p + q - r);
  if (!(h > 0.0)) return std::numeric_limits<double>::infinity();
  return p * q * r / std::sqrt(h);
}

double face_eta(const OrderedSimplex& s, int opposite_vertex) {
  const auto e = face_edges(opposite_vertex);
  return eta(s.y(e[0]), s.y(e[1]), s.y(e[2]));
}

double circumradius(const OrderedSimplex& s) {
  const auto x = s.squared().x;
  const double d = formulas::delta(x);
  if (!(d > 0.0)) throw DegenerateError("circumradius: flat simplex " + s.to_string());
  return std::sqrt(formulas::circum_numerator(x) / (4.0 * d));
}

double volume(const OrderedSimplex& s) { return std::sqrt(std::max(0.0, formulas::delta(s.squared().x))) / 12.0; }

double solid_angle(const OrderedSimplex& s, int i) {
  const double a = a_vertex(s, i);
  if (!(a > 0.0)) throw std::domain_error("solid_angle: a_i <= 0 is outside the supported branch");
  const double d = std::max(0.0, formulas::delta(s.squared().x));
  return 2.0 * std::atan(std::sqrt(d) / (2.0 * a));
}

double dihedral(const OrderedSimplex& s) {
  const auto v = embed(s);
  const Vec3 axis = v[1] - v[0];
  const Vec3 n1 = cross(axis, v[2] - v[0]);
  const Vec3 n2 = cross(axis, v[3] - v[0]);
  const double l1 = norm(n1);
  const double l2 = norm(n2);
  if (l1 == 0.0 || l2 == 0.0) throw DegenerateError("dihedral: degenerate face along edge 1");
  const double c = std::clamp(dot(n1, n2) / (l1 * l2), -1.0, 1.0);
  return std::acos(c);
}

namespace {

void require_unit_separation(const OrderedSimplex& s, const char* who) {
  if (s.min_edge() < 2.0) throw PreconditionError(std::string(who) + ": edge shorter than 2 in " + s.to_string());
}

}  // namespace

double gamma(const OrderedSimplex& s) {
  require_unit_separation(s, "gamma");
  double sol = 0.0;
  for (int i = 0; i < 4; ++i) sol += solid_angle(s, i);
  return -delta_oct() * volume(s) + sol / 3.0;
}

double voronoi_volume(const OrderedSimplex& s, int i) {
  if (i < 0 || i > 3) throw std::out_of_range("voronoi_volume: vertex index must be 0..3");
  const auto x = s.squared().x;
  const double d = formulas::delta(x);
  if (!(d > 0.0)) throw DegenerateError("vor: flat simplex " + s.to_string());
  const double root = std::sqrt(d);
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (k == i) continue;
    const auto f = formulas::face_squares(x, k);
    const double t = formulas::heron16(f[0], f[1], f[2]);
    if (!(t > 0.0)) throw DegenerateError("vor: degenerate face in " + s.to_string());
    total += formulas::circum_weight_numerator(x, k) * formulas::rogers_edge_sum(x, i, k) / (12.0 * root * t);
  }
  return total;
}

double vor_analytic(const OrderedSimplex& s, int i) {
  return 4.0 * (-delta_oct() * voronoi_volume(s, i) + solid_angle(s, i) / 3.0);
}

double rogers_density(double a, double b, double c) {
  if (!(1.0 <= a && a <= b && b <= c)) throw PreconditionError("rogers_density requires 1 <= a <= b <= c");
  const double s1 = std::sqrt(b * b - a * a);
  const double s2 = std::sqrt(c * c - b * b);
  const double vol = a * s1 * s2 / 6.0;
  if (!(vol > 0.0)) throw DegenerateError("rogers_density: zero-volume Rogers simplex");
  const double sol = 2.0 * std::atan(s1 * s2 / ((a + b) * (b + c)));
  return (sol / 3.0) / vol;
}

SimplexClass classify(const OrderedSimplex& s) {
  if (s.min_edge() < 2.0) throw PreconditionError("classify: edge shorter than 2 in " + s.to_string());
  SimplexClass out;
  bool qr = true;
  for (int k = 0; k < 6; ++k) {
    if (s.y(k) > kCloseNeighbor) {
      qr = false;
      out.long_edges.push_back(k);
    }
  }
  bool small = true;
  for (int k = 0; k < 4; ++k) {
    out.face_circumradii[k] = face_eta(s, k);
    // Compared in squares so a face of circumradius exactly sqrt 2 counts as small.
    const auto e = face_edges(k);
    const double e2 = formulas::eta_squared(s.y(e[0]) * s.y(e[0]), s.y(e[1]) * s.y(e[1]), s.y(e[2]) * s.y(e[2]));
    if (!(e2 >= 0.0) || e2 > 2.0 * (1.0 + 1e-15)) small = false;
  }
  if (qr)
    out.kind = SimplexKind::QuasiRegularTetrahedron;
  else if (small)
    out.kind = SimplexKind::SmallNonQR;
  else
    out.kind = SimplexKind::Other;
  return out;
}

}  // namespace octbound
