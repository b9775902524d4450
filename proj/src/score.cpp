#include "octbound/score.hpp"

#include <algorithm>
#include <cmath>

#include "octbound/polytope.hpp"

namespace octbound {

std::string to_string(ScoringMode mode) { return mode == ScoringMode::Compression ? "compression" : "voronoi"; }

std::string to_string(ClusterKind kind) {
  return kind == ClusterKind::QuasiRegularTetrahedron ? "qr" : "other";
}

namespace {

bool all_at_most(const OrderedSimplex& s, std::initializer_list<int> edges, double bound) {
  return std::all_of(edges.begin(), edges.end(), [&](int k) { return s.y(k) <= bound; });
}

// Edge conditions for compression scoring with the single long edge at
// position k, expressed for k = 0 (first edge) or k = 3 (fourth edge) and
// transported to the other positions by the vertex relabelings fixing v0.
bool compression_allowed(const OrderedSimplex& s, int k) {
  const int opposite = (k + 3) % 6;
  std::array<int, 2> same_group{};   // the other two edges of k's group
  std::array<int, 2> other_group{};  // the other two edges of the opposite group
  const int base = k < 3 ? 0 : 3;
  const int obase = 3 - base;
  int a = 0;
  int b = 0;
  for (int j = 0; j < 3; ++j) {
    if (base + j != k) same_group[a++] = base + j;
    if (obase + j != opposite) other_group[b++] = obase + j;
  }
  if (k < 3) {
    // second, third and fourth at most 2.06; fifth and sixth at most 2.08.
    return all_at_most(s, {same_group[0], same_group[1], opposite}, 2.06) &&
           all_at_most(s, {other_group[0], other_group[1]}, 2.08);
  }
  const bool a_ok = s.y(opposite) <= 2.06;
  const bool b_ok = all_at_most(s, {other_group[0], other_group[1]}, 2.08);
  const bool c_ok = all_at_most(s, {same_group[0], same_group[1]}, 2.2);
  const bool d_ok = s.y(k) <= 2.58 || all_at_most(s, {same_group[0], same_group[1]}, 2.12);
  return a_ok && b_ok && c_ok && d_ok;
}

}  // namespace

bool compression_conditions_hold(const OrderedSimplex& s, int long_edge) {
  if (long_edge < 0 || long_edge > 5) throw std::out_of_range("compression_conditions_hold: edge index must be 0..5");
  return compression_allowed(s, long_edge);
}

ScoringMode compression_rule(const OrderedSimplex& s) {
  const SimplexClass cls = classify(s);
  if (cls.kind != SimplexKind::SmallNonQR)
    throw PreconditionError("compression_rule: not a small simplex outside the quasi-regular class: " + s.to_string());
  if (cls.long_edges.size() != 1) return ScoringMode::Voronoi;
  return compression_allowed(s, cls.long_edges.front()) ? ScoringMode::Compression : ScoringMode::Voronoi;
}

double score_simplex(const OrderedSimplex& s, ScoringMode mode, int i) {
  const SimplexClass cls = classify(s);
  switch (cls.kind) {
    case SimplexKind::QuasiRegularTetrahedron:
      return circumradius(s) <= kVoronoiRadiusThreshold ? gamma(s) : vor_analytic(s, i);
    case SimplexKind::SmallNonQR:
      return mode == ScoringMode::Compression ? gamma(s) : vor_analytic(s, i);
    case SimplexKind::Other:
      break;
  }
  throw PreconditionError("score_simplex: simplex is neither quasi-regular nor small: " + s.to_string());
}

Cluster::Cluster(ClusterKind kind, std::vector<ClusterEntry> entries) : kind_(kind), entries_(std::move(entries)) {
  if (kind_ == ClusterKind::QuasiRegularTetrahedron) {
    if (entries_.size() != 1 || entries_.front().cls.kind != SimplexKind::QuasiRegularTetrahedron)
      throw PreconditionError("Cluster: a quasi-regular cluster holds exactly one quasi-regular tetrahedron");
  } else {
    for (const auto& e : entries_)
      if (e.cls.kind == SimplexKind::QuasiRegularTetrahedron)
        throw PreconditionError("Cluster: quasi-regular tetrahedron inside a non-tetrahedral cluster");
  }
}

Cluster Cluster::make(ClusterKind kind, const std::vector<OrderedSimplex>& simplices, bool octahedron) {
  std::vector<ClusterEntry> entries;
  entries.reserve(simplices.size());
  for (const auto& s : simplices) {
    SimplexClass cls = classify(s);
    ScoringMode mode = ScoringMode::Voronoi;
    if (cls.kind == SimplexKind::SmallNonQR) mode = compression_rule(s);
    if (cls.kind == SimplexKind::QuasiRegularTetrahedron)
      mode = circumradius(s) <= kVoronoiRadiusThreshold ? ScoringMode::Compression : ScoringMode::Voronoi;
    entries.push_back({s, std::move(cls), mode, octahedron});
  }
  return Cluster(kind, std::move(entries));
}

double score_cluster(const Cluster& c) {
  double total = 0.0;
  for (const auto& e : c.entries()) {
    if (e.cls.kind == SimplexKind::Other)
      total += vor_analytic(e.simplex, 0);
    else
      total += score_simplex(e.simplex, e.mode, 0);
  }
  return total;
}

Star::Star(std::vector<Cluster> clusters) : clusters_(std::move(clusters)) {}

double score_star(const Star& d) {
  double total = 0.0;
  for (const auto& c : d.clusters()) total += score_cluster(c);
  return total;
}

double piece_density(const DecompositionPiece& p) {
  struct Visitor {
    double operator()(const PieceType1& t) const {
      const OrderedSimplex& s = t.simplex;
      if (s.min_edge() < 2.0) throw PreconditionError("piece_density: type 1 simplex has an edge below 2");
      const double vol = volume(s);
      if (!(vol > 0.0)) throw DegenerateError("piece_density: type 1 simplex has zero volume");
      double sol = 0.0;
      for (int i = 0; i < 4; ++i) sol += solid_angle(s, i);
      return (sol / 3.0) / vol;
    }
    double operator()(const PieceType2&) const { return 1.0 / (kPieceCutoff * kPieceCutoff); }
    double operator()(const PieceType3& t) const {
      if (!(t.height >= 1.0 && t.height <= kPieceCutoff))
        throw PreconditionError("piece_density: type 3 height outside [1, 1.18]");
      if (!(t.aperture > 0.0)) throw PreconditionError("piece_density: type 3 aperture must be positive");
      return kSqrt2 / (t.height * t.height + t.height * kSqrt2);
    }
    double operator()(const PieceType4& t) const {
      if (!(t.a >= 1.0 && t.a <= kPieceCutoff)) throw PreconditionError("piece_density: type 4 a outside [1, 1.18]");
      const double b2 = t.b * t.b;
      if (!(b2 >= 4.0 / 3.0 * (1.0 - 1e-15) && b2 <= 2.0 * (1.0 + 1e-15)))
        throw PreconditionError("piece_density: type 4 b^2 outside [4/3, 2]");
      return rogers_density(t.a, t.b, kSqrt2);
    }
  };
  return std::visit(Visitor{}, p);
}

namespace {

// Snap to a 2^-48 grid so sums of a handful of tip volumes are exact.
double snap(double v) { return std::ldexp(std::nearbyint(std::ldexp(v, 48)), -48); }

}  // namespace

TipVolumes tip_volumes(const TipGeometry& t) {
  constexpr double kTol = 1e-9;
  auto check_edge = [&](Vec3 a, Vec3 b) {
    const double d = dist(a, b);
    if (d < 2.0 - kTol || d > kCloseNeighbor + kTol)
      throw PreconditionError("tip_volumes: edge length outside the quasi-regular range [2, 2.51]");
  };
  for (int i = 0; i < 3; ++i) {
    check_edge(t.w, t.v[i]);
    check_edge(t.v[i], t.v[(i + 1) % 3]);
  }
  const Vec3 n = cross(t.v[1] - t.v[0], t.v[2] - t.v[0]);
  const double side = dot(n, t.w - t.v[0]);
  if (std::fabs(side) < 1e-12 * norm(n)) throw DegenerateError("tip_volumes: apex lies in the face plane");

  TipVolumes out;
  if (eta(dist(t.v[0], t.v[1]), dist(t.v[1], t.v[2]), dist(t.v[0], t.v[2])) <= kSqrt2) return out;

  // Beyond the face: the side of the plane away from w.
  const Vec3 out_normal = side > 0.0 ? n : -1.0 * n;
  const HalfSpace beyond{out_normal, dot(out_normal, t.v[0])};
  for (int i = 0; i < 3; ++i) {
    std::vector<HalfSpace> hs{beyond};
    for (int j = 0; j < 3; ++j) {
      hs.push_back(closer_to(t.w, t.v[j]));
      if (j != i) hs.push_back(closer_to(t.v[i], t.v[j]));
    }
    out.x[i] = snap(intersect_halfspaces(hs).volume);
  }
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    out.correction[i] = -out.x[i];
    total += out.x[i];
  }
  out.correction_w = total;
  return out;
}

std::array<OrderedSimplex, 4> octahedron_split(const std::array<Vec3, 6>& p) {
  constexpr double kTol = 1e-9;
  std::array<std::array<bool, 6>, 6> adj{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) adj[i][j] = i != j && dist(p[i], p[j]) <= kCloseNeighbor + kTol;
  std::array<int, 6> partner{};
  for (int i = 0; i < 6; ++i) {
    int degree = 0;
    int missing = -1;
    for (int j = 0; j < 6; ++j) {
      if (j == i) continue;
      if (adj[i][j])
        ++degree;
      else
        missing = j;
    }
    if (degree != 4) throw PreconditionError("octahedron_split: close-neighbor graph is not an octahedron");
    partner[i] = missing;
  }
  for (int i = 0; i < 6; ++i)
    if (partner[partner[i]] != i) throw PreconditionError("octahedron_split: diagonals do not pair up");

  // Shortest diagonal no longer than 2 sqrt 2; ties go to the lowest index.
  int best = -1;
  double best_len = 0.0;
  for (int i = 0; i < 6; ++i) {
    const int j = partner[i];
    if (j < i) continue;
    const double len = dist(p[i], p[j]);
    if (len > kTwoSqrt2 + kTol) continue;
    if (best < 0 || len < best_len - 1e-12) {
      best = i;
      best_len = len;
    }
  }
  if (best < 0) throw PreconditionError("octahedron_split: no diagonal of length at most 2 sqrt 2");
  const int top = best;
  const int bottom = partner[best];

  // Walk the equatorial 4-cycle.
  std::array<int, 4> ring{};
  int start = 0;
  while (start == top || start == bottom) ++start;
  ring[0] = start;
  int prev = -1;
  for (int k = 1; k < 4; ++k) {
    const int cur = ring[k - 1];
    int next = -1;
    for (int j = 0; j < 6; ++j)
      if (j != top && j != bottom && j != prev && j != cur && adj[cur][j]) {
        next = j;
        break;
      }
    if (next < 0) throw PreconditionError("octahedron_split: equator is not a 4-cycle");
    ring[k] = next;
    prev = cur;
  }
  return {simplex_from_points(p[top], p[bottom], p[ring[0]], p[ring[1]]),
          simplex_from_points(p[top], p[bottom], p[ring[1]], p[ring[2]]),
          simplex_from_points(p[top], p[bottom], p[ring[2]], p[ring[3]]),
          simplex_from_points(p[top], p[bottom], p[ring[3]], p[ring[0]])};
}

}  // namespace octbound
