#include "octbound/appendix.hpp"

#include <sstream>

#include "octbound/formulas.hpp"

namespace octbound {

std::string to_string(ExceptionCenter c) { return c == ExceptionCenter::S0 ? "S0" : "S1"; }

ExceptionCenter exception_center_from_string(const std::string& s) {
  if (s == "S0") return ExceptionCenter::S0;
  if (s == "S1") return ExceptionCenter::S1;
  throw std::invalid_argument("unknown exception center '" + s + "' (expected S0 or S1)");
}

OrderedSimplex center_simplex(ExceptionCenter c) {
  if (c == ExceptionCenter::S0) return OrderedSimplex({kTwoSqrt2, 2.0, 2.0, 2.0, 2.0, 2.0});
  return OrderedSimplex({kTwoSqrt2, 2.0, 2.0, kTwoSqrt2, 2.0, 2.0});
}

std::vector<int> long_edges_of(ExceptionCenter c) {
  return c == ExceptionCenter::S0 ? std::vector<int>{0} : std::vector<int>{0, 3};
}

namespace {

Box6 placement_box(const std::vector<int>& long_edges, double radius) {
  const Interval two_sqrt2 = constants().two_sqrt2;
  const double long_lo = (two_sqrt2 - Interval(radius)).hi();
  const double short_hi = (Interval(2.0) + Interval(radius)).lo();
  Box6 b;
  for (int k = 0; k < 6; ++k) b[k] = Interval(2.0, short_hi);
  for (int k : long_edges) b[k] = Interval(long_lo, two_sqrt2.hi());
  return b;
}

// Edge lengths as polynomials in the deviations f_k >= 0.
std::array<MultiPoly, 6> edge_polys(ExceptionCenter c) {
  std::array<MultiPoly, 6> y;
  for (int k = 0; k < 6; ++k) y[k] = MultiPoly(2.0) + MultiPoly::variable(k);
  for (int k : long_edges_of(c)) y[k] = MultiPoly(constants().two_sqrt2) - MultiPoly::variable(k);
  return y;
}

}  // namespace

Box6 region_box(ExceptionCenter c, double radius) { return placement_box(long_edges_of(c), radius); }

std::vector<Box6> region_placements(ExceptionCenter c, double radius) {
  if (c == ExceptionCenter::S0) {
    std::vector<Box6> out;
    for (int k = 0; k < 6; ++k) out.push_back(placement_box({k}, radius));
    return out;
  }
  return {placement_box({0, 3}, radius), placement_box({1, 4}, radius), placement_box({2, 5}, radius)};
}

AppendixFrame appendix_frame(ExceptionCenter c, double radius) {
  if (!(radius > 0.0 && radius < 0.25)) throw std::invalid_argument("appendix_frame: radius must lie in (0, 0.25)");
  AppendixFrame fr;
  fr.center = c;
  fr.radius = radius;
  Box6 cbox = point_box(center_simplex(c));
  for (int k : long_edges_of(c)) cbox[k] = constants().two_sqrt2;
  fr.delta0 = *eval_delta_I(cbox);
  if (c == ExceptionCenter::S0) {
    fr.t0 = sqrt(fr.delta0) / 2.0;
  } else {
    // S1 is flat; Delta0 = 0 exactly, the enclosure merely contains it.
    if (!fr.delta0.contains(0.0)) throw std::logic_error("appendix_frame: Delta(S1) enclosure misses 0");
    fr.t0 = Interval(0.0);
  }
  const Box6 region = region_box(c, radius);
  Interval sum(0.0);
  for (int i = 0; i < 4; ++i) {
    fr.a0[i] = eval_a_vertex_I(cbox, i);
    fr.b[i] = Interval(2.0) / (3.0 * (1.0 + sqr(fr.t0) / sqr(fr.a0[i])));
    fr.a_minus[i] = Interval(eval_a_vertex_I(region, i).lo());
    sum += fr.b[i] / fr.a0[i];
  }
  fr.c0 = -delta_oct_interval() / 6.0 + sum;
  return fr;
}

std::array<double, 6> dominate_linear(const MultiPoly& p, double r) {
  std::array<Interval, 6> lin;
  lin.fill(Interval(0.0));
  for (const auto& [e, c] : p.terms()) {
    const int d = degree(e);
    if (d == 0) throw std::logic_error("dominate_linear: polynomial has a constant term");
    if (d == 1) {
      for (int k = 0; k < 6; ++k)
        if (e[k]) lin[k] += Interval(c.hi());
      continue;
    }
    if (c.hi() <= 0.0) continue;
    Interval scale(c.hi());
    for (int j = 1; j < d; ++j) scale *= Interval(r);
    for (int k = 0; k < 6; ++k) lin[k] += Interval(scale.hi());
  }
  std::array<double, 6> out{};
  for (int k = 0; k < 6; ++k) out[k] = lin[k].hi();
  return out;
}

namespace {

// Delta >= Delta(8,4,4,x4,4,4) on the S0 region: the partial derivatives of
// Delta have fixed signs there, so Delta decreases along the monotone path
// from the point towards the corner with only x4 kept.
bool delta_corner_monotone(const Box6& region) {
  formulas::Six<Interval> x;
  for (int k = 0; k < 6; ++k) x[k] = sqr(region[k]);
  if (formulas::delta_partial(x, 0).hi() > 0.0) return false;
  for (int k : {1, 2, 4, 5})
    if (formulas::delta_partial(x, k).lo() < 0.0) return false;
  return true;
}

// Delta(8,4,4,4+e,4,4) = 128 - 8 e^2: both sides are quadratics in e, so three
// exact evaluations settle the identity.
bool delta_corner_identity() {
  for (double e : {0.0, 1.0, 2.0}) {
    const formulas::Six<double> x{8.0, 4.0, 4.0, 4.0 + e, 4.0, 4.0};
    if (formulas::delta(x) != 128.0 - 8.0 * e * e) return false;
  }
  return true;
}

}  // namespace

AppendixResult appendix_bound(ExceptionCenter c, double radius) {
  AppendixResult res;
  res.frame = appendix_frame(c, radius);
  const AppendixFrame& fr = res.frame;
  std::ostringstream why;

  const auto y = edge_polys(c);
  formulas::Six<MultiPoly> ys;
  for (int k = 0; k < 6; ++k) ys[k] = y[k];
  for (int i = 0; i < 4; ++i) {
    if (!(fr.a_minus[i].lo() > 0.0)) {
      res.detail = "a_i lower bound not positive";
      return res;
    }
    // a_i0 - a_i; the constant parts agree by definition of a_i0.
    const MultiPoly d = -formulas::a_vertex(ys, i).without_constant();
    const Interval a02 = sqr(fr.a0[i]);
    res.first_sum += MultiPoly(fr.b[i] / a02) * d;
    res.second_sum += MultiPoly(fr.b[i] / (a02 * fr.a_minus[i])) * sqr(d);
  }
  res.first_linear = dominate_linear(res.first_sum, radius);
  res.second_linear = dominate_linear(res.second_sum, radius);

  // Gamma at the center is 0 exactly; the enclosure must agree.
  const auto g0 = eval_gamma_I([&] {
    Box6 b = point_box(center_simplex(c));
    for (int k : long_edges_of(c)) b[k] = constants().two_sqrt2;
    return b;
  }());
  if (!g0 || !g0->contains(0.0)) {
    res.detail = "Gamma enclosure at the center misses 0";
    return res;
  }
  if (!(fr.c0.hi() < 0.0)) {
    res.detail = "c0 not negative";
    return res;
  }

  std::array<Interval, 6> lin;
  for (int k = 0; k < 6; ++k) lin[k] = Interval(res.first_linear[k]) + Interval(res.second_linear[k]);

  if (c == ExceptionCenter::S1) {
    // t0 = 0 and t >= 0: Gamma <= t (c0 + sum of both sums) <= t (c0 + r sum max(l_j, 0)).
    res.t_lower = Interval(0.0);
    Interval m = Interval(fr.c0.hi());
    for (int k = 0; k < 6; ++k)
      if (lin[k].hi() > 0.0) m += Interval(lin[k].hi()) * Interval(radius);
    res.flat_margin = m.hi();
    res.verified = res.flat_margin < 0.0;
    if (!res.verified) why << "flat margin " << res.flat_margin << " not negative";
    res.detail = res.verified ? "Gamma <= t * (negative constant) on the region" : why.str();
    return res;
  }

  const Box6 region = region_box(c, radius);
  if (!delta_corner_identity() || !delta_corner_monotone(region)) {
    res.detail = "Delta lower bound 128 - 8 e4^2 could not be established";
    return res;
  }
  const Interval e4max = sqr(Interval(region[3].hi())) - 4.0;
  const Interval delta_lo = 128.0 - 8.0 * sqr(e4max);
  res.t_lower = Interval((sqrt(Interval(delta_lo.lo())) / 2.0).lo());
  // (t - t0) c0 <= 2 e4^2 |c0| / (t + t0) and e4 <= (4 + r) f4.
  const Interval four_r = 4.0 + Interval(radius);
  const Interval kappa = 2.0 * Interval(-fr.c0.lo()) * sqr(four_r) * Interval(radius) / (res.t_lower + fr.t0);
  res.kappa = kappa.hi();

  // t (first + second) <= t_lower * L(f) once every coefficient of L is negative.
  res.verified = true;
  for (int k = 0; k < 6; ++k) {
    if (!(lin[k].hi() < 0.0)) {
      res.verified = false;
      why << "linear coefficient of f" << k + 1 << " is " << lin[k].hi() << "; ";
      continue;
    }
    Interval coef = Interval(res.t_lower.lo()) * lin[k];
    if (k == 3) coef += Interval(res.kappa);
    res.final_linear[k] = coef.hi();
    if (!(res.final_linear[k] < 0.0)) {
      res.verified = false;
      why << "final coefficient of f" << k + 1 << " is " << res.final_linear[k] << "; ";
    }
  }
  res.detail = res.verified ? "Gamma <= negative linear form in the deviations" : why.str();
  return res;
}

}  // namespace octbound
