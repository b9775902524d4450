#include <cmath>
#include <random>

#include "doctest.h"
#include "octbound/appendix.hpp"

using namespace octbound;

namespace {

bool holds(const Interval& i, double v) { return i.lo() <= v && v <= i.hi(); }

}  // namespace

TEST_SUITE("multipoly") {
  TEST_CASE("algebra agrees with scalar evaluation") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> coef(-2, 2);
    std::uniform_real_distribution<double> pt(-1, 1);
    std::uniform_int_distribution<int> var(0, 5);
    for (int n = 0; n < 100; ++n) {
      // Random sparse p and q of degree <= 3.
      MultiPoly p(coef(rng)), q(coef(rng));
      for (int t = 0; t < 4; ++t) {
        p += coef(rng) * MultiPoly::variable(var(rng)) * MultiPoly::variable(var(rng));
        q += coef(rng) * MultiPoly::variable(var(rng)) * MultiPoly::variable(var(rng)) * MultiPoly::variable(var(rng));
      }
      std::array<double, 6> f{};
      for (double& x : f) x = pt(rng);
      const double pv = p.eval(f), qv = q.eval(f);
      auto rel = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); };
      CHECK(rel((p + q).eval(f), pv + qv));
      CHECK(rel((p - q).eval(f), pv - qv));
      CHECK(rel((p * q).eval(f), pv * qv));
      CHECK(rel(sqr(p).eval(f), pv * pv));
      CHECK(rel((-p).eval(f), -pv));
      std::array<Interval, 6> fi{};
      for (int k = 0; k < 6; ++k) fi[k] = Interval(f[k]);
      CHECK(holds((p * q).eval(fi), pv * qv));
    }
  }

  TEST_CASE("structure") {
    const MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(3);
    const MultiPoly p = 2.0 * x * x * y + 3.0 * y + MultiPoly(5.0);
    CHECK(p.degree() == 3);
    CHECK(p.constant_term() == Interval(5));
    CHECK(p.without_constant().constant_term() == Interval(0));
    CHECK(p.terms().size() == 3);
    CHECK((x - x).terms().empty());
    CHECK((p - p).degree() <= 0);
    CHECK(degree(MultiPoly::Exponents{1, 0, 2, 0, 0, 1}) == 4);
    CHECK_THROWS(MultiPoly::variable(6));
  }

  TEST_CASE("linear domination") {
    // 0.5 f1 - f2 + 2 f1 f2 - 3 f3^2 on [0, 0.01]^6: the negative square is
    // dropped, 2 f1 f2 <= 2 * 0.01 * (f1 + ... + f6).
    const MultiPoly f1 = MultiPoly::variable(0), f2 = MultiPoly::variable(1), f3 = MultiPoly::variable(2);
    const MultiPoly p = 0.5 * f1 - f2 + 2.0 * f1 * f2 - 3.0 * f3 * f3;
    const auto lin = dominate_linear(p, 0.01);
    CHECK(lin[0] == doctest::Approx(0.52).epsilon(1e-12));
    CHECK(lin[1] == doctest::Approx(-0.98).epsilon(1e-12));
    CHECK(lin[2] == doctest::Approx(0.02).epsilon(1e-12));
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0, 0.01);
    for (int n = 0; n < 1000; ++n) {
      std::array<double, 6> f{};
      for (double& x : f) x = u(rng);
      double bound = 0.0;
      for (int k = 0; k < 6; ++k) bound += lin[k] * f[k];
      REQUIRE(p.eval(f) <= bound + 1e-15);
    }
  }
}

TEST_SUITE("appendix") {
  TEST_CASE("frame at S0") {
    const AppendixFrame fr = appendix_frame(ExceptionCenter::S0, 0.001);
    const double s2 = std::sqrt(2.0);
    CHECK(holds(fr.a0[0], 16 + 12 * s2));
    CHECK(holds(fr.a0[1], 16 + 12 * s2));
    CHECK(std::fabs(fr.a0[2].mid() - 16) < 1e-12);
    CHECK(std::fabs(fr.a0[3].mid() - 16) < 1e-12);
    CHECK(std::fabs(fr.b[0].mid() - (3 + 2 * s2) / 9) < 1e-12);
    CHECK(std::fabs(fr.b[1].mid() - (3 + 2 * s2) / 9) < 1e-12);
    CHECK(std::fabs(fr.b[2].mid() - 16.0 / 27) < 1e-12);
    CHECK(std::fabs(fr.b[3].mid() - 16.0 / 27) < 1e-12);
    CHECK(std::fabs(fr.delta0.mid() - 128) < 1e-9);
    CHECK(fr.c0.lo() >= -0.006793);
    CHECK(fr.c0.hi() <= -0.006792);
    CHECK(std::fabs(fr.c0.mid() - -0.00679271) < 5e-9);
    for (int i = 0; i < 4; ++i) {
      CHECK(fr.a_minus[i].hi() <= fr.a0[i].lo());
      CHECK(fr.c0.width() < 1e-12);
    }
  }

  TEST_CASE("frame at S1") {
    const AppendixFrame fr = appendix_frame(ExceptionCenter::S1, 0.01);
    for (int i = 0; i < 4; ++i) {
      CHECK(holds(fr.a0[i], 16 + 8 * std::sqrt(2.0)));
      CHECK(std::fabs(fr.b[i].mid() - 2.0 / 3) < 1e-12);
      CHECK(fr.a_minus[i].lo() >= 27.0);
    }
    CHECK(fr.t0.hi() < 1e-6);
    CHECK(fr.delta0.hi() < 1e-9);
  }

  TEST_CASE("S0 bound") {
    const AppendixResult r = appendix_bound(ExceptionCenter::S0, 0.001);
    CHECK(r.verified);
    CHECK(r.first_linear[0] <= -0.005);
    CHECK(r.first_linear[3] <= -0.04);
    for (int k : {1, 2, 4, 5}) CHECK(r.first_linear[k] <= -0.03);
    for (int k = 0; k < 6; ++k) {
      CHECK(r.second_linear[k] <= 0.00056);
      CHECK(r.final_linear[k] < 0.0);
    }
    CHECK(r.t_lower.lo() >= 5.628);
    CHECK(r.first_sum.constant_term().contains_zero());
    CHECK(r.second_sum.constant_term().contains_zero());
  }

  TEST_CASE("S1 bound") {
    const AppendixResult r = appendix_bound(ExceptionCenter::S1, 0.01);
    CHECK(r.verified);
    CHECK(r.flat_margin < 0.0);
  }

  TEST_CASE("regions") {
    const Box6 b0 = region_box(ExceptionCenter::S0, 0.001);
    CHECK(b0[0].lo() == doctest::Approx(kTwoSqrt2 - 0.001));
    CHECK(b0[0].hi() >= kTwoSqrt2);
    for (int k = 1; k < 6; ++k) CHECK(b0[k] == Interval(2.0, 2.001));
    CHECK(long_edges_of(ExceptionCenter::S1) == std::vector<int>{0, 3});
    // Relabelings: three placements of the long edge for S0, three opposite
    // pairs for S1.
    CHECK(region_placements(ExceptionCenter::S0, 0.001).size() == 6);
    CHECK(region_placements(ExceptionCenter::S1, 0.01).size() == 3);
    CHECK(exception_center_from_string(to_string(ExceptionCenter::S1)) == ExceptionCenter::S1);
    CHECK_THROWS(exception_center_from_string("S2"));
  }

  TEST_CASE("radius going to zero leaves the scalar equalities") {
    for (ExceptionCenter c : {ExceptionCenter::S0, ExceptionCenter::S1}) {
      CHECK(std::fabs(gamma(center_simplex(c))) <= 1e-12);
      const AppendixResult r = appendix_bound(c, 1e-9);
      CHECK(r.verified);
      const auto g = eval_gamma_I(region_box(c, 1e-9));
      REQUIRE(g);
      CHECK(g->contains_zero());
      // S1 is flat and sqrt(Delta) is not Lipschitz there.
      CHECK(g->width() < (c == ExceptionCenter::S0 ? 1e-8 : 1e-3));
    }
  }

  TEST_CASE("gamma over the regions is bounded by the linear form") {
    // Sampling oracle: Gamma(S) <= sum final_linear[j] f_j at S0, with f_j
    // the edge deviations from the center.
    const AppendixResult r = appendix_bound(ExceptionCenter::S0, 0.001);
    const Box6 b = region_box(ExceptionCenter::S0, 0.001);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int n = 0; n < 10000; ++n) {
      std::array<double, 6> y{};
      double bound = 0.0;
      for (int k = 0; k < 6; ++k) {
        y[k] = b[k].lo() + u(rng) * b[k].width();
        const double f = std::fabs(y[k] - center_simplex(ExceptionCenter::S0).y(k));
        bound += r.final_linear[k] * f;
      }
      REQUIRE(gamma(OrderedSimplex(y)) <= bound + 1e-13);
    }
  }
}
