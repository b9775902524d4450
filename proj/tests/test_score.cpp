#include <cmath>
#include <random>

#include "doctest.h"
#include "octbound/fixture.hpp"
#include "octbound/score.hpp"
#include "oracles.hpp"

using namespace octbound;

namespace {

OrderedSimplex S(double a, double b, double c, double d, double e, double f) { return OrderedSimplex({a, b, c, d, e, f}); }

std::array<double, 6> sorted_edges(const OrderedSimplex& s) {
  auto y = s.edges();
  std::sort(y.begin(), y.end());
  return y;
}

bool congruent_edges(const OrderedSimplex& a, const OrderedSimplex& b, double tol) {
  const auto x = sorted_edges(a);
  const auto y = sorted_edges(b);
  for (int k = 0; k < 6; ++k)
    if (std::fabs(x[k] - y[k]) > tol) return false;
  return true;
}

std::array<Vec3, 6> regular_octahedron(double edge) {
  const double r = edge / std::sqrt(2.0);
  return {Vec3{0, 0, r}, Vec3{0, 0, -r}, Vec3{r, 0, 0}, Vec3{0, r, 0}, Vec3{-r, 0, 0}, Vec3{0, -r, 0}};
}

// Volume of an octahedron given as (top, bottom, equator ring) with the
// centroid inside: eight cones over the faces.
long double octahedron_volume(const std::array<Vec3, 6>& p) {
  Vec3 c{};
  for (const auto& v : p) c = c + v;
  c = (1.0 / 6.0) * c;
  const int ring[4] = {2, 3, 4, 5};
  long double total = 0.0L;
  for (int apex : {0, 1})
    for (int k = 0; k < 4; ++k) total += oracle::coord_volume({c, p[apex], p[ring[k]], p[ring[(k + 1) % 4]]});
  return total;
}

Vec3 circumcenter(const std::array<Vec3, 4>& p) {
  const Vec3 a = p[1] - p[0], b = p[2] - p[0], c = p[3] - p[0];
  const double aa = dot(a, a), bb = dot(b, b), cc = dot(c, c);
  const Vec3 num = aa * cross(b, c) + bb * cross(c, a) + cc * cross(a, b);
  return p[0] + (1.0 / (2.0 * dot(a, cross(b, c)))) * num;
}

// Monte Carlo estimate of vol(X_i) for each i; returns estimates and their
// standard errors.
std::pair<std::array<double, 3>, std::array<double, 3>> mc_tip(const TipGeometry& t, int samples, std::uint64_t seed) {
  const Vec3 cc = circumcenter({t.w, t.v[0], t.v[1], t.v[2]});
  double lo[3], hi[3];
  const Vec3 pts[4] = {t.v[0], t.v[1], t.v[2], cc};
  for (int k = 0; k < 3; ++k) {
    lo[k] = hi[k] = k == 0 ? pts[0].x : k == 1 ? pts[0].y : pts[0].z;
    for (const auto& p : pts) {
      const double c = k == 0 ? p.x : k == 1 ? p.y : p.z;
      lo[k] = std::min(lo[k], c - 0.05);
      hi[k] = std::max(hi[k], c + 0.05);
    }
  }
  const Vec3 n = cross(t.v[1] - t.v[0], t.v[2] - t.v[0]);
  const double wside = dot(n, t.w - t.v[0]);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<int, 3> hits{};
  for (int s = 0; s < samples; ++s) {
    const Vec3 x{lo[0] + u(rng) * (hi[0] - lo[0]), lo[1] + u(rng) * (hi[1] - lo[1]), lo[2] + u(rng) * (hi[2] - lo[2])};
    if (dot(n, x - t.v[0]) * wside >= 0.0) continue;
    const double dw = dist(x, t.w);
    double d[3];
    bool tip = true;
    for (int j = 0; j < 3; ++j) {
      d[j] = dist(x, t.v[j]);
      tip = tip && dw <= d[j];
    }
    if (!tip) continue;
    const int nearest = d[0] <= d[1] && d[0] <= d[2] ? 0 : d[1] <= d[2] ? 1 : 2;
    ++hits[nearest];
  }
  const double box = (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
  std::array<double, 3> est{}, err{};
  for (int i = 0; i < 3; ++i) {
    const double f = static_cast<double>(hits[i]) / samples;
    est[i] = f * box;
    err[i] = box * std::sqrt(f * (1 - f) / samples);
  }
  return {est, err};
}

TipGeometry tip_of(const OrderedSimplex& s) {
  const auto p = embed(s);
  return {p[0], {p[1], p[2], p[3]}};
}

}  // namespace

TEST_SUITE("score") {
  TEST_CASE("compression rule examples") {
    CHECK(compression_rule(S(2.6, 2, 2, 2, 2, 2)) == ScoringMode::Compression);
    CHECK(compression_rule(S(2.6, 2.07, 2, 2, 2, 2)) == ScoringMode::Voronoi);
    CHECK(compression_rule(S(2, 2, 2, 2.6, 2.15, 2)) == ScoringMode::Voronoi);
    CHECK(compression_rule(S(2, 2, 2, 2.6, 2.1, 2)) == ScoringMode::Compression);
    CHECK(compression_rule(S(2, 2, 2, 2.55, 2.15, 2)) == ScoringMode::Compression);
    CHECK(compression_rule(S(2, 2, 2, 2.55, 2.21, 2)) == ScoringMode::Voronoi);
    CHECK(compression_rule(S(2, 2, 2.09, 2.55, 2, 2)) == ScoringMode::Voronoi);
    CHECK(compression_rule(S(2.6, 2, 2, 2, 2.08, 2.08)) == ScoringMode::Compression);
    CHECK(compression_rule(S(2, 2, 2.07, 2.55, 2, 2)) == ScoringMode::Compression);
    CHECK(compression_rule(S(2.6, 2, 2, 2, 2.09, 2)) == ScoringMode::Voronoi);
    CHECK(compression_rule(S(2.6, 2.6, 2, 2, 2, 2)) == ScoringMode::Voronoi);
    CHECK_THROWS_AS(compression_rule(OrderedSimplex::regular()), PreconditionError);
    CHECK_THROWS_AS(compression_rule(S(2.9, 2, 2, 2, 2, 2)), PreconditionError);
  }

  TEST_CASE("compression rule is invariant under relabelings fixing the distinguished vertex") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> shortish(2.0, 2.12);
    std::uniform_real_distribution<double> longish(2.52, kTwoSqrt2);
    std::uniform_int_distribution<int> pos(0, 5);
    int checked = 0, compression = 0;
    for (int n = 0; n < 5000; ++n) {
      std::array<double, 6> y{};
      for (double& e : y) e = shortish(rng);
      y[pos(rng)] = longish(rng);
      const OrderedSimplex s(y);
      if (classify(s).kind != SimplexKind::SmallNonQR) continue;
      const ScoringMode m = compression_rule(s);
      compression += m == ScoringMode::Compression;
      for (const auto& perm : vertex_permutations()) {
        if (perm[0] != 0) continue;
        REQUIRE(compression_rule(relabel(s, perm)) == m);
      }
      ++checked;
    }
    CHECK(checked > 1000);
    CHECK(compression > 50);
    CHECK(checked - compression > 50);
  }

  TEST_CASE("score_simplex examples") {
    for (int i = 0; i < 4; ++i) CHECK(score_simplex(OrderedSimplex::regular(), ScoringMode::Voronoi, i) == doctest::Approx(pt()).epsilon(1e-12));
    const OrderedSimplex big = S(2, 2, 2, 2.51, 2.51, 2.51);
    CHECK(circumradius(big) > kVoronoiRadiusThreshold);
    CHECK(score_simplex(big, ScoringMode::Compression, 0) == vor_analytic(big, 0));
    CHECK(score_simplex(big, ScoringMode::Compression, 0) < 0.0);
    CHECK(std::fabs(score_simplex(S(kTwoSqrt2, 2, 2, 2, 2, 2), ScoringMode::Compression)) < 1e-12);
    const OrderedSimplex small = S(2.6, 2, 2, 2, 2, 2);
    CHECK(score_simplex(small, ScoringMode::Compression) == gamma(small));
    CHECK(score_simplex(small, ScoringMode::Voronoi, 2) == vor_analytic(small, 2));
    CHECK_THROWS_AS(score_simplex(S(2.9, 2.9, 2, 2, 2, 2), ScoringMode::Voronoi), PreconditionError);
  }

  TEST_CASE("four vertex scores add up to four times the compression") {
    std::mt19937_64 rng(12);
    int checked = 0;
    for (int n = 0; n < 2000; ++n) {
      const OrderedSimplex s(oracle::random_edges(rng, 2.0, kTwoSqrt2));
      if (classify(s).kind != SimplexKind::SmallNonQR) continue;
      double comp = 0.0, vor = 0.0;
      for (int i = 0; i < 4; ++i) {
        comp += score_simplex(s, ScoringMode::Compression, i);
        vor += score_simplex(s, ScoringMode::Voronoi, i);
      }
      REQUIRE(std::fabs(comp - 4 * gamma(s)) <= 1e-12);
      REQUIRE(std::fabs(vor - 4 * gamma(s)) <= 1e-9);
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("cluster scores") {
    const Cluster qr = Cluster::make(ClusterKind::QuasiRegularTetrahedron, {OrderedSimplex::regular()});
    CHECK(score_cluster(qr) == doctest::Approx(pt()).epsilon(1e-12));
    const OrderedSimplex quarter = S(kTwoSqrt2, 2, 2, 2, 2, 2);
    const Cluster oct = Cluster::make(ClusterKind::Other, {quarter, quarter, quarter, quarter}, true);
    CHECK(std::fabs(score_cluster(oct)) < 1e-12);
    const Cluster pair = Cluster::make(ClusterKind::Other, {quarter, quarter});
    CHECK(std::fabs(score_cluster(pair)) < 1e-12);
    for (const auto& e : pair.entries()) CHECK(e.mode == ScoringMode::Compression);

    // A simplex that is neither small nor quasi-regular is scored by vor.
    const OrderedSimplex wide = S(2.9, 2.9, 2, 2, 2, 2);
    const Cluster other = Cluster::make(ClusterKind::Other, {wide});
    CHECK(score_cluster(other) == vor_analytic(wide, 0));

    CHECK_THROWS_AS(Cluster::make(ClusterKind::QuasiRegularTetrahedron, {quarter}), PreconditionError);
    CHECK_THROWS_AS(Cluster::make(ClusterKind::Other, {OrderedSimplex::regular()}), PreconditionError);
  }

  TEST_CASE("fcc and hcp stars score eight points") {
    for (const char* name : {"fcc", "hcp"}) {
      CAPTURE(name);
      const Fixture f = builtin_fixture(name);
      int qr = 0, oct = 0;
      for (const auto& c : f.clusters) {
        qr += c.kind == "qr";
        oct += c.kind == "octahedron";
        if (c.kind == "octahedron")
          for (const auto& s : c.simplices) CHECK(congruent_edges(s, S(kTwoSqrt2, 2, 2, 2, 2, 2), 0.0));
      }
      CHECK(qr == 8);
      CHECK(oct == 6);
      CHECK(f.vertices.size() == 13);
      CHECK(std::fabs(score_star(to_star(f)) - 8 * pt()) <= 1e-9);

      Fixture tets = f;
      std::erase_if(tets.clusters, [](const FixtureCluster& c) { return c.kind != "qr"; });
      CHECK(std::fabs(score_star(to_star(tets)) - 8 * pt()) <= 1e-9);
    }
    CHECK_THROWS_AS(builtin_fixture("bcc"), std::invalid_argument);
  }

  TEST_CASE("star scores are additive") {
    const Star whole = to_star(builtin_fixture("hcp"));
    const auto& cs = whole.clusters();
    for (std::size_t cut = 0; cut <= cs.size(); cut += 3) {
      const Star a(std::vector<Cluster>(cs.begin(), cs.begin() + static_cast<long>(cut)));
      const Star b(std::vector<Cluster>(cs.begin() + static_cast<long>(cut), cs.end()));
      CHECK(std::fabs(score_star(a) + score_star(b) - score_star(whole)) <= 1e-12);
    }
    CHECK(score_star(Star({})) == 0.0);
  }

  TEST_CASE("fixture text round trip") {
    for (const char* name : {"fcc", "hcp"}) {
      const Fixture f = builtin_fixture(name);
      const Fixture g = read_fixture(write_fixture(f));
      CHECK(g.name == f.name);
      REQUIRE(g.vertices.size() == f.vertices.size());
      for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        CHECK(g.vertices[i].x == f.vertices[i].x);
        CHECK(g.vertices[i].y == f.vertices[i].y);
        CHECK(g.vertices[i].z == f.vertices[i].z);
      }
      REQUIRE(g.clusters.size() == f.clusters.size());
      for (std::size_t i = 0; i < f.clusters.size(); ++i) {
        CHECK(g.clusters[i].kind == f.clusters[i].kind);
        CHECK(g.clusters[i].simplices == f.clusters[i].simplices);
      }
      CHECK(score_star(to_star(g)) == score_star(to_star(f)));
    }
  }

  TEST_CASE("malformed fixtures report the line") {
    auto message = [](const std::string& text) {
      try {
        read_fixture(text);
      } catch (const std::invalid_argument& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("vertex 0 0\n").find("line 1") != std::string::npos);
    CHECK(message("# ok\ncluster qr 2 2 2 2 2\n").find("line 2") != std::string::npos);
    CHECK(message("cluster cube 2 2 2 2 2 2\n").find("cube") != std::string::npos);
    CHECK(message("cluster qr 2 2 2 2 2 x\n").find("bad number") != std::string::npos);
    CHECK(message("cluster qr 2 2 2 2 2 9\n").find("line 1") != std::string::npos);
    CHECK(message("sphere 1\n").find("unknown record") != std::string::npos);
    CHECK(message("\n# comment\ncluster qr 2 2 2 2 2 2\n").empty());
  }

  TEST_CASE("piece densities") {
    CHECK(piece_density(PieceType3{1.0, 1.0}) == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::fabs(piece_density(PieceType3{1.0, 1.0}) - 0.585786) < 5e-7);
    CHECK(piece_density(PieceType2{}) == doctest::Approx(1 / (1.18 * 1.18)).epsilon(1e-15));
    CHECK(std::fabs(piece_density(PieceType2{}) - 0.718184) < 5e-7);
    CHECK(std::fabs(piece_density(PieceType4{1.0, 2 / std::sqrt(3.0)}) - delta_oct()) < 1e-12);
    CHECK(piece_density(PieceType3{1.0, 1.0}) < delta_oct());
    CHECK(piece_density(PieceType2{}) < delta_oct());

    double prev = INFINITY;
    for (int k = 0; k <= 1800; ++k) {
      const double h = 1.0 + 0.18 * k / 1800.0;
      const double d = piece_density(PieceType3{h, 0.5});
      REQUIRE(d < prev);
      prev = d;
    }

    CHECK_THROWS_AS(piece_density(PieceType3{0.9, 1.0}), PreconditionError);
    CHECK_THROWS_AS(piece_density(PieceType3{1.1, 0.0}), PreconditionError);
    CHECK_THROWS_AS(piece_density(PieceType4{1.2, 1.2}), PreconditionError);
    CHECK_THROWS_AS(piece_density(PieceType4{1.0, 1.5}), PreconditionError);
  }

  TEST_CASE("type 1 density is below the octahedral density exactly when the compression is negative") {
    CHECK(std::fabs(piece_density(PieceType1{S(kTwoSqrt2, 2, 2, 2, 2, 2)}) - delta_oct()) < 1e-12);
    std::mt19937_64 rng(13);
    for (int n = 0; n < 2000; ++n) {
      const OrderedSimplex s(oracle::random_edges(rng, 2.0, 2.9));
      const double d = piece_density(PieceType1{s});
      const double g = gamma(s);
      if (std::fabs(g) < 1e-12) continue;
      REQUIRE((d <= delta_oct()) == (g <= 0.0));
    }
    // Against sampling: covered volume / simplex volume.
    std::mt19937_64 mc(14);
    const auto p = oracle::random_points(mc, 2.0, 2.4);
    const auto [covered, err] = oracle::mc_ball_volume(p, mc, 400000);
    const double d = piece_density(PieceType1{simplex_from_points(p[0], p[1], p[2], p[3])});
    const double vol = static_cast<double>(oracle::coord_volume(p));
    CHECK(std::fabs(d * vol - covered) <= 4 * err + 1e-9);
    CHECK_THROWS_AS(piece_density(PieceType1{S(1.9, 2, 2, 2, 2, 2)}), PreconditionError);
  }

  TEST_CASE("tip volumes") {
    // Small face circumradius: no tip.
    const TipVolumes none = tip_volumes(tip_of(OrderedSimplex::regular()));
    for (int i = 0; i < 3; ++i) {
      CHECK(none.x[i] == 0.0);
      CHECK(none.correction[i] == 0.0);
    }
    CHECK(none.correction_w == 0.0);

    const OrderedSimplex big = S(2, 2, 2, 2.51, 2.51, 2.51);
    const TipGeometry t = tip_of(big);
    const TipVolumes v = tip_volumes(t);
    for (int i = 0; i < 3; ++i) CHECK(v.x[i] > 0.0);
    CHECK(v.x[0] == doctest::Approx(v.x[1]).epsilon(1e-9));
    CHECK(v.x[1] == doctest::Approx(v.x[2]).epsilon(1e-9));
    const auto [est, err] = mc_tip(t, 2000000, 15);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(v.x[i] - est[i]) <= 4 * err[i] + 1e-9);

    CHECK_THROWS_AS(tip_volumes({Vec3{0, 0, 0}, {Vec3{3, 0, 0}, Vec3{0, 2, 0}, Vec3{0, 0, 2}}}), PreconditionError);
    const TipGeometry flat{Vec3{0, 0, 0}, {Vec3{2, 0, 0}, Vec3{1, std::sqrt(3.0), 0}, Vec3{1, 0.5, 0}}};
    CHECK_THROWS(tip_volumes(flat));
  }

  TEST_CASE("tip corrections cancel exactly") {
    std::mt19937_64 rng(16);
    int nonzero = 0;
    std::uniform_real_distribution<double> near(2.0, 2.05);
    std::uniform_real_distribution<double> far(2.45, kCloseNeighbor);
    for (int n = 0; n < 300; ++n) {
      // Apex edges short and face edges long, so that some tips protrude.
      const OrderedSimplex s({near(rng), near(rng), near(rng), far(rng), far(rng), far(rng)});
      const TipVolumes v = tip_volumes(tip_of(s));
      REQUIRE(v.correction_w + v.correction[0] + v.correction[1] + v.correction[2] == 0.0);
      for (int i = 0; i < 3; ++i) REQUIRE(v.correction[i] == -v.x[i]);
      nonzero += v.correction_w > 0.0;
    }
    CHECK(nonzero > 10);
  }

  TEST_CASE("octahedron split") {
    const auto reg = regular_octahedron(2.0);
    const auto pieces = octahedron_split(reg);
    long double total = 0.0L;
    for (const auto& s : pieces) {
      CHECK(congruent_edges(s, S(kTwoSqrt2, 2, 2, 2, 2, 2), 1e-12));
      CHECK(std::fabs(s.y(0) - kTwoSqrt2) < 1e-12);
      total += oracle::cayley_menger_volume(s.edges());
    }
    CHECK(std::fabs(static_cast<double>(total - octahedron_volume(reg))) < 1e-12);
    CHECK(std::fabs(static_cast<double>(total) - 8 * std::sqrt(2.0) / 3) < 1e-12);

    auto moved = reg;
    moved[0].z += 0.01;
    const auto mp = octahedron_split(moved);
    long double mtotal = 0.0L;
    for (const auto& s : mp) {
      for (int k = 1; k < 6; ++k) CHECK((s.y(k) > 2.0 - 1e-12 && s.y(k) < kCloseNeighbor));
      CHECK(s.y(0) < kTwoSqrt2 + 1e-12);
      mtotal += oracle::cayley_menger_volume(s.edges());
    }
    CHECK(std::fabs(static_cast<double>(mtotal - octahedron_volume(moved))) < 1e-12);

    CHECK_THROWS_AS(octahedron_split(regular_octahedron(2.05)), PreconditionError);
    auto broken = reg;
    broken[0] = Vec3{0, 0, 3};
    CHECK_THROWS_AS(octahedron_split(broken), PreconditionError);
  }
}
