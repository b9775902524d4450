#include <cmath>
#include <random>

#include "doctest.h"
#include "octbound/geometry.hpp"
#include "octbound/polytope.hpp"
#include "oracles.hpp"

using namespace octbound;

namespace {

OrderedSimplex S(double a, double b, double c, double d, double e, double f) { return OrderedSimplex({a, b, c, d, e, f}); }

const double r2 = std::sqrt(2.0);
const OrderedSimplex S0 = S(2 * r2, 2, 2, 2, 2, 2);
const OrderedSimplex S1 = S(2 * r2, 2, 2, 2 * r2, 2, 2);

OrderedSimplex from_points(const std::array<Vec3, 4>& p) { return OrderedSimplex(oracle::edges_of(p)); }

using oracle::circumcenter;
using oracle::inside;
using oracle::voronoi_piece_volume;

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("constants match the closed form and the reference values") {
    CHECK(delta_oct() == doctest::Approx(static_cast<double>(oracle::delta_oct_ld())).epsilon(1e-15));
    CHECK(std::fabs(delta_oct() - 0.720903) < 1e-6);
    CHECK(std::fabs(pt() - 0.0553736) < 1e-7);
    CHECK(pt() == gamma(OrderedSimplex::regular()));
  }

  TEST_CASE("a-function values") {
    CHECK(a_vertex(S0, 0) == doctest::Approx(16 + 12 * r2).epsilon(1e-14));
    CHECK(a_vertex(S0, 2) == doctest::Approx(16).epsilon(1e-14));
    CHECK(a_vertex(OrderedSimplex::regular(), 0) == doctest::Approx(20).epsilon(1e-14));
    // Each a_i is the vertex-0 function after moving vertex i to position 0.
    const OrderedSimplex s = S(2.1, 2.2, 2.3, 2.4, 2.5, 2.6);
    for (const auto& perm : vertex_permutations())
      for (int v = 0; v < 4; ++v)
        CHECK(a_vertex(relabel(s, perm), v) == doctest::Approx(a_vertex(s, perm[v])).epsilon(1e-13));
  }

  TEST_CASE("triangle circumradius") {
    CHECK(eta(2, 2, 2) == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(eta(2.51, 2, 2) > 1.207);
    CHECK(eta(2, 2, 2 * r2) == doctest::Approx(r2).epsilon(1e-14));
    CHECK(std::isinf(eta(1, 1, 2)));
  }

  TEST_CASE("eta is nondecreasing in the longest edge") {
    for (double q = 2.0; q <= 2.8; q += 0.1)
      for (double r = 2.0; r <= q; r += 0.1) {
        double prev = 0.0;
        for (double p = q; p < q + r - 1e-3 && p <= 2.83; p += 0.005) {
          const double e = eta(p, q, r);
          CHECK(e >= prev);
          prev = e;
        }
      }
  }

  TEST_CASE("circumradius") {
    CHECK(circumradius(S(2, 2, 2, 2.51, 2, 2)) > 1.3045);
    CHECK(circumradius(S(2, 2, 2, 2.51, 2.51, 2.2604)) == doctest::Approx(1.405656).epsilon(1e-6));
    CHECK(circumradius(OrderedSimplex::regular()) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
    CHECK_THROWS_AS(circumradius(S1), DegenerateError);
  }

  TEST_CASE("volume") {
    CHECK(volume(OrderedSimplex::regular()) == doctest::Approx(2 * r2 / 3).epsilon(1e-14));
    CHECK(volume(S0) == doctest::Approx(std::sqrt(128.0) / 12).epsilon(1e-14));
    CHECK(volume(S1) == doctest::Approx(0.0));
    CHECK(delta(S0.squared()) == doctest::Approx(128).epsilon(1e-13));
  }

  TEST_CASE("solid angle and dihedral anchors") {
    const double reg = static_cast<double>(oracle::vos_solid_angle(embed(OrderedSimplex::regular()), 0));
    CHECK(reg == doctest::Approx(0.551286).epsilon(1e-6));
    for (int i = 0; i < 4; ++i) CHECK(solid_angle(OrderedSimplex::regular(), i) == doctest::Approx(reg).epsilon(1e-14));
    const OrderedSimplex corner = S(2, 2, 2, 2 * r2, 2 * r2, 2 * r2);
    CHECK(solid_angle(corner, 0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(dihedral(corner) == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(dihedral(OrderedSimplex::regular()) == doctest::Approx(std::acos(1.0 / 3)).epsilon(1e-12));
    CHECK(solid_angle(S0, 0) ==
          doctest::Approx(2 * std::atan(std::sqrt(128.0) / (2 * (16 + 12 * r2)))).epsilon(1e-14));
    CHECK(solid_angle(S0, 0) == doctest::Approx(static_cast<double>(oracle::vos_solid_angle(embed(S0), 0))).epsilon(1e-12));
  }

  TEST_CASE("compression values") {
    CHECK(gamma(OrderedSimplex::regular()) == doctest::Approx(0.0553736).epsilon(1e-6));
    CHECK(std::fabs(gamma(S0)) < 1e-12);
    CHECK(std::fabs(gamma(S1)) < 1e-12);
    CHECK(gamma(S(2.6, 2, 2, 2, 2, 2)) < 0.0);
    CHECK_THROWS_AS(gamma(S(1.9, 2, 2, 2, 2, 2)), PreconditionError);
  }

  TEST_CASE("Rogers density") {
    CHECK(rogers_density(1, 2 / std::sqrt(3.0), r2) == doctest::Approx(delta_oct()).epsilon(1e-13));
    CHECK(rogers_density(1, 1.207, 1.3045) < delta_oct());
    CHECK(rogers_density(1, eta(2, 2, 2.06), 1.39) < delta_oct());
    CHECK(rogers_density(1.1, 1.3, r2) < delta_oct());
  }

  TEST_CASE("classification") {
    CHECK(classify(OrderedSimplex::regular()).kind == SimplexKind::QuasiRegularTetrahedron);
    CHECK(classify(S(2.51, 2, 2, 2, 2, 2)).kind == SimplexKind::QuasiRegularTetrahedron);
    const auto c = classify(S(2.6, 2, 2, 2, 2, 2));
    CHECK(c.kind == SimplexKind::SmallNonQR);
    CHECK(c.long_edges == std::vector<int>{0});
    CHECK(classify(S(2, 2, 2, 2.9, 2, 2)).kind == SimplexKind::Other);
    CHECK(eta(2.9, 2, 2) > r2);
    CHECK(classify(S0).kind == SimplexKind::SmallNonQR);  // face circumradius exactly sqrt 2 counts as small
  }

  TEST_CASE("volume and solid angles agree with coordinate oracles on random simplices") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 1000; ++n) {
      const auto p = oracle::random_points(rng, 2.0, 2 * r2);
      const OrderedSimplex s = from_points(p);
      const double v = static_cast<double>(oracle::coord_volume(p));
      REQUIRE(std::fabs(volume(s) - v) <= 1e-9);
      REQUIRE(std::fabs(volume(s) - static_cast<double>(oracle::cayley_menger_volume(s.edges()))) <= 1e-9);
      for (int i = 0; i < 4; ++i)
        REQUIRE(std::fabs(solid_angle(s, i) - static_cast<double>(oracle::vos_solid_angle(p, i))) <= 1e-9);
    }
  }

  TEST_CASE("compression equals the ball-sector formula and a Monte Carlo estimate") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 4; ++n) {
      const auto p = oracle::random_points(rng, 2.0, 2.5);
      const OrderedSimplex s = from_points(p);
      double sectors = 0.0;
      for (int i = 0; i < 4; ++i) sectors += solid_angle(s, i) / 3.0;
      CHECK(gamma(s) == doctest::Approx(-delta_oct() * volume(s) + sectors).epsilon(1e-14));
      const auto [est, se] = oracle::mc_ball_volume(p, rng, 400000);
      CHECK(std::fabs(est - sectors) <= 3 * se + 1e-12);
    }
  }

  TEST_CASE("the four vor values add up to four times the compression") {
    CHECK(vor_analytic(S(2.1, 2.2, 2.3, 2.4, 2.2, 2.1), 0) + vor_analytic(S(2.1, 2.2, 2.3, 2.4, 2.2, 2.1), 1) +
              vor_analytic(S(2.1, 2.2, 2.3, 2.4, 2.2, 2.1), 2) + vor_analytic(S(2.1, 2.2, 2.3, 2.4, 2.2, 2.1), 3) ==
          doctest::Approx(4 * gamma(S(2.1, 2.2, 2.3, 2.4, 2.2, 2.1))).epsilon(1e-12));
    std::mt19937_64 rng(3);
    int outside = 0;
    for (int n = 0; n < 1000; ++n) {
      const OrderedSimplex s(oracle::random_edges(rng, 2.0, 2 * r2));
      double sum = 0.0;
      for (int i = 0; i < 4; ++i) sum += vor_analytic(s, i);
      REQUIRE(std::fabs(sum - 4 * gamma(s)) <= 1e-9);
      if (!inside(embed(s), circumcenter(embed(s)))) ++outside;
    }
    CHECK(outside > 0);  // the sample includes circumcenters outside the simplex
  }

  TEST_CASE("regular tetrahedron vor is a quarter of the volume") {
    const OrderedSimplex s = OrderedSimplex::regular();
    CHECK(vor_analytic(s, 0) == doctest::Approx(4 * (-delta_oct() * volume(s) / 4 + solid_angle(s, 0) / 3)).epsilon(1e-13));
  }

  TEST_CASE("vor agrees with the half-space intersection oracle") {
    // S(2,2,2,2.51,2.51,2.51) has its circumcenter beyond the far face, so
    // only the random sample below (interior circumcenters) is compared.
    CHECK_FALSE(inside(embed(S(2, 2, 2, 2.51, 2.51, 2.51)), circumcenter(embed(S(2, 2, 2, 2.51, 2.51, 2.51)))));
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 100) {
      const auto p = oracle::random_points(rng, 2.0, 2 * r2);
      if (!inside(p, circumcenter(p))) continue;
      const OrderedSimplex s = from_points(p);
      for (int i = 0; i < 4; ++i) {
        const double ref = 4 * (-delta_oct() * voronoi_piece_volume(p, i) + solid_angle(s, i) / 3);
        REQUIRE(std::fabs(vor_analytic(s, i) - ref) <= 1e-8);
        REQUIRE(std::fabs(voronoi_volume(s, i) - voronoi_piece_volume(p, i)) <= 1e-8);
      }
      ++checked;
    }
  }

  TEST_CASE("relabeling symmetry") {
    std::mt19937_64 rng(9);
    for (int n = 0; n < 50; ++n) {
      const OrderedSimplex s(oracle::random_edges(rng, 2.0, 2 * r2));
      for (const auto& perm : vertex_permutations()) {
        const OrderedSimplex t = relabel(s, perm);
        CHECK(delta(t.squared()) == doctest::Approx(delta(s.squared())).epsilon(1e-12));
        CHECK(gamma(t) == doctest::Approx(gamma(s)).epsilon(1e-11));
        for (int a = 0; a < 4; ++a) CHECK(vor_analytic(t, a) == doctest::Approx(vor_analytic(s, perm[a])).epsilon(1e-10));
      }
    }
  }
}
