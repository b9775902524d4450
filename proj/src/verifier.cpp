#include "octbound/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "octbound/formulas.hpp"
#include "octbound/geometry.hpp"
#include "octbound/score.hpp"

namespace octbound {

std::string to_string(Target t) {
  switch (t) {
    case Target::GammaLeZero:
      return "gamma-le-zero";
    case Target::VorLtZero:
      return "vor-lt-zero";
    case Target::RogersDensityLeDeltaOct:
      return "rogers-density-le-delta-oct";
    case Target::SignChange:
      return "sign-change";
  }
  return "?";
}

std::string to_string(Strictness s) { return s == Strictness::Strict ? "strict" : "nonstrict"; }

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified:
      return "verified";
    case VerifyStatus::Undecided:
      return "undecided";
    case VerifyStatus::CounterexampleCandidate:
      return "counterexample-candidate";
  }
  return "?";
}

namespace {

const Interval& close_neighbor() {
  static const Interval v = enclose_decimal("2.51");
  return v;
}

bool edge_target(Target t) { return t == Target::GammaLeZero || t == Target::VorLtZero || t == Target::SignChange; }

Feasibility combine(Feasibility acc, Feasibility f) {
  if (acc == Feasibility::Infeasible || f == Feasibility::Infeasible) return Feasibility::Infeasible;
  if (acc == Feasibility::Unknown || f == Feasibility::Unknown) return Feasibility::Unknown;
  return Feasibility::Feasible;
}

Feasibility faces_within(const Box6& b, const Interval& eta_max) {
  const Interval limit = sqr(eta_max);
  Feasibility out = Feasibility::Feasible;
  for (int k = 0; k < 4; ++k) {
    const auto e = face_edges(k);
    const Interval h = formulas::heron16(sqr(b[e[0]]), sqr(b[e[1]]), sqr(b[e[2]]));
    // A face with no positive area anywhere has infinite circumradius.
    if (h.hi() <= 0.0) return Feasibility::Infeasible;
    const auto e2o = eval_face_eta_sq_I(b, k);
    if (!e2o) {
      out = Feasibility::Unknown;
      continue;
    }
    const Interval& e2 = *e2o;
    if (e2.lo() > limit.hi()) return Feasibility::Infeasible;
    if (e2.hi() > limit.lo()) out = Feasibility::Unknown;
  }
  return out;
}

Feasibility realizable(const Box6& b) {
  Feasibility out = Feasibility::Feasible;
  for (int k = 0; k < 4; ++k) {
    const auto e = face_edges(k);
    const Interval h = formulas::heron16(sqr(b[e[0]]), sqr(b[e[1]]), sqr(b[e[2]]));
    if (h.hi() < 0.0) return Feasibility::Infeasible;
    if (h.lo() < 0.0) out = Feasibility::Unknown;
  }
  const auto d = eval_delta_I(b);
  if (d->hi() < 0.0) return Feasibility::Infeasible;
  if (d->lo() < 0.0) out = Feasibility::Unknown;
  return out;
}

// Edge conditions of the compression rule, for a box whose single long edge
// is k. Feasible when compression is allowed on the whole box.
Feasibility compression_allowed(const Box6& b, int k) {
  const Interval e206 = enclose_decimal("2.06");
  const Interval e208 = enclose_decimal("2.08");
  const Interval e22 = enclose_decimal("2.2");
  const Interval e212 = enclose_decimal("2.12");
  const Interval e258 = enclose_decimal("2.58");
  const int opposite = (k + 3) % 6;
  std::vector<int> same;
  std::vector<int> other;
  const int base = k < 3 ? 0 : 3;
  for (int j = 0; j < 3; ++j) {
    if (base + j != k) same.push_back(base + j);
    if (3 - base + j != opposite) other.push_back(3 - base + j);
  }
  auto certainly_at_most = [&](const std::vector<int>& edges, const Interval& t) {
    return std::all_of(edges.begin(), edges.end(), [&](int e) { return b[e].hi() <= t.lo(); });
  };
  if (k < 3) {
    std::vector<int> first = same;
    first.push_back(opposite);
    return certainly_at_most(first, e206) && certainly_at_most(other, e208) ? Feasibility::Feasible
                                                                             : Feasibility::Unknown;
  }
  const bool ok = certainly_at_most({opposite}, e206) && certainly_at_most(other, e208) &&
                  certainly_at_most(same, e22) && (b[k].hi() <= e258.lo() || certainly_at_most(same, e212));
  return ok ? Feasibility::Feasible : Feasibility::Unknown;
}

Feasibility compression_fails(const Box6& b) {
  const Interval& t = close_neighbor();
  int long_edge = -1;
  for (int k = 0; k < 6; ++k) {
    if (b[k].lo() >= t.hi()) {
      if (long_edge >= 0) return Feasibility::Unknown;  // two long edges: Voronoi, not pruned
      long_edge = k;
    } else if (b[k].hi() > t.lo()) {
      return Feasibility::Unknown;
    }
  }
  if (long_edge < 0) return Feasibility::Unknown;
  return compression_allowed(b, long_edge) == Feasibility::Feasible ? Feasibility::Infeasible : Feasibility::Unknown;
}

}  // namespace

Feasibility constraint_prune(const Box6& b, const std::vector<Constraint>& constraints) {
  for (const auto& c : b)
    if (c.lo() > c.hi()) return Feasibility::Infeasible;
  Feasibility out = realizable(b);
  if (out == Feasibility::Infeasible) return out;
  for (const auto& c : constraints) {
    switch (c.kind) {
      case Constraint::Kind::SmallSimplex:
        out = combine(out, faces_within(b, constants().sqrt2));
        break;
      case Constraint::Kind::FaceEtaAtMost:
        out = combine(out, faces_within(b, c.value));
        break;
      case Constraint::Kind::NotQuasiRegular: {
        const Interval& t = close_neighbor();
        bool all_close = true;
        bool some_long = false;
        for (const auto& e : b) {
          if (e.hi() > t.lo()) all_close = false;
          if (e.lo() > t.hi()) some_long = true;
        }
        if (all_close) return Feasibility::Infeasible;
        if (!some_long) out = combine(out, Feasibility::Unknown);
        break;
      }
      case Constraint::Kind::RadLessThan: {
        const auto r2 = eval_rad_sq_I(b);
        const Interval limit = sqr(c.value);
        if (r2 && r2->lo() >= limit.hi()) return Feasibility::Infeasible;
        if (!r2 || r2->hi() >= limit.lo()) out = combine(out, Feasibility::Unknown);
        break;
      }
      case Constraint::Kind::CompressionFails:
        out = combine(out, compression_fails(b));
        break;
    }
    if (out == Feasibility::Infeasible) return out;
  }
  return out;
}

namespace {

std::optional<Interval> enclose_target(const InequalityTask& task, const Box6& b, std::array<double, 6>* sensitivity) {
  if (sensitivity) sensitivity->fill(0.0);
  switch (task.target) {
    case Target::GammaLeZero:
      return eval_gamma_I(b, sensitivity);
    case Target::VorLtZero:
      return eval_vor_I(b, task.vertex, sensitivity);
    case Target::RogersDensityLeDeltaOct: {
      const auto d = eval_rogers_density_I(b[0], b[1], b[2]);
      if (!d) return std::nullopt;
      return *d - delta_oct_interval();
    }
    case Target::SignChange: {
      const auto v = eval_vor_I(b, task.vertex);
      const auto g = eval_gamma_I(b);
      if (!v || !g) return std::nullopt;
      return *v - *g;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Interval> target_enclosure(const InequalityTask& task, const Box6& b) {
  return enclose_target(task, b, nullptr);
}

void validate(const InequalityTask& task) {
  if (task.name.empty()) throw std::invalid_argument("task has no name");
  for (const auto& c : task.domain)
    if (!(c.lo() <= c.hi()) || !std::isfinite(c.lo()) || !std::isfinite(c.hi()))
      throw std::invalid_argument("task '" + task.name + "': empty or unbounded box component");
  if (task.vertex < 0 || task.vertex > 3) throw std::invalid_argument("task '" + task.name + "': vertex must be 0..3");
  if (edge_target(task.target)) {
    for (const auto& c : task.domain)
      if (c.lo() < 2.0 || c.hi() > constants().two_sqrt2.hi())
        throw std::invalid_argument("task '" + task.name + "': edge intervals must lie in [2, 2*sqrt2]");
  } else {
    if (!task.constraints.empty())
      throw std::invalid_argument("task '" + task.name + "': constraints apply to edge-length targets only");
    if (task.domain[0].lo() < 1.0) throw std::invalid_argument("task '" + task.name + "': Rogers parameter a below 1");
  }
  if (!task.exceptions.empty() && task.target != Target::GammaLeZero)
    throw std::invalid_argument("task '" + task.name + "': exception regions apply to gamma-le-zero only");
  for (const auto& e : task.exceptions)
    if (!(e.radius > 0.0 && e.radius < 0.25))
      throw std::invalid_argument("task '" + task.name + "': exception radius must lie in (0, 0.25)");
  if (task.target == Target::SignChange) {
    int varying = 0;
    for (const auto& c : task.domain)
      if (c.width() > 1e-12) ++varying;
    if (varying != 1) throw std::invalid_argument("task '" + task.name + "': sign-change needs exactly one varying edge");
  }
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

enum class Leaf { Resolved, Split, Counterexample };

struct Context {
  const InequalityTask& task;
  const VerifyConfig& config;
  std::vector<Box6> exception_boxes;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

struct Tally {
  std::uint64_t cells = 0;
  std::uint64_t pruned = 0;
  std::uint64_t exception_leaves = 0;
  std::uint64_t undecided = 0;
  int max_depth = 0;
  double worst = -std::numeric_limits<double>::infinity();
  bool counterexample = false;
  bool timed_out = false;
  std::vector<Witness> witnesses;

  void witness(Witness w) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
};

bool satisfied(const InequalityTask& task, const VerifyConfig& cfg, const Interval& enc) {
  return task.strictness == Strictness::Strict ? enc.hi() < 0.0 : enc.hi() <= cfg.tolerance;
}

bool violated(const InequalityTask& task, const VerifyConfig& cfg, const Interval& enc) {
  return task.strictness == Strictness::Strict ? enc.lo() >= 0.0 : enc.lo() > cfg.tolerance;
}

bool in_exception(const Context& ctx, const Box6& b) {
  return std::any_of(ctx.exception_boxes.begin(), ctx.exception_boxes.end(),
                     [&](const Box6& e) { return subset_of(b, e); });
}

Feasibility feasibility(const Context& ctx, const Box6& b) {
  if (edge_target(ctx.task.target)) return constraint_prune(b, ctx.task.constraints);
  // Rogers shapes need a <= b <= c.
  if (b[0].lo() > b[1].hi() || b[1].lo() > b[2].hi()) return Feasibility::Infeasible;
  return b[0].hi() <= b[1].lo() && b[1].hi() <= b[2].lo() ? Feasibility::Feasible : Feasibility::Unknown;
}

// Split where the first-order spread |df/dy_k| * width_k is largest, unless
// that component is much narrower than the widest one.
int split_dimension(const Box6& b, const std::array<double, 6>& sensitivity) {
  const int widest = widest_dimension(b);
  int best = widest;
  for (int k = 0; k < 6; ++k)
    if (sensitivity[k] > sensitivity[best]) best = k;
  return b[best].width() * 4.0 < b[widest].width() ? widest : best;
}

Leaf examine(const Context& ctx, const Box6& b, int depth, Tally& t, int* split = nullptr) {
  ++t.cells;
  t.max_depth = std::max(t.max_depth, depth);
  if (feasibility(ctx, b) == Feasibility::Infeasible) {
    ++t.pruned;
    return Leaf::Resolved;
  }
  if (in_exception(ctx, b)) {
    ++t.exception_leaves;
    return Leaf::Resolved;
  }
  std::array<double, 6> sensitivity{};
  const auto enc = enclose_target(ctx.task, b, &sensitivity);
  if (split) *split = split_dimension(b, sensitivity);
  if (enc && satisfied(ctx.task, ctx.config, *enc)) {
    t.worst = std::max(t.worst, enc->hi());
    return Leaf::Resolved;
  }
  // Look for a genuine violation at the midpoint.
  const auto m = midpoint(b);
  Box6 mb = point_box(m);
  for (int k = 0; k < 6; ++k)
    if (b[k].width() == 0.0) mb[k] = b[k];
  if (!in_exception(ctx, mb) && feasibility(ctx, mb) == Feasibility::Feasible) {
    const auto menc = target_enclosure(ctx.task, mb);
    if (menc && violated(ctx.task, ctx.config, *menc)) {
      t.counterexample = true;
      t.witness({b, m, "target violated at this point (enclosure " + to_string(*menc) + ")"});
      return Leaf::Counterexample;
    }
  }
  return Leaf::Split;
}

void run_subtree(const Context& ctx, const Box6& root, int root_depth, std::uint64_t budget, Tally& t) {
  std::vector<std::pair<Box6, int>> stack{{root, root_depth}};
  while (!stack.empty()) {
    auto [b, depth] = stack.back();
    stack.pop_back();
    if (budget && t.cells >= budget) {
      ++t.undecided;
      t.witness({b, std::nullopt, "cell budget exhausted"});
      continue;
    }
    if ((t.cells & 255) == 0 && std::chrono::steady_clock::now() > ctx.deadline) t.timed_out = true;
    if (t.timed_out) {
      ++t.undecided;
      t.witness({b, std::nullopt, "time limit reached"});
      continue;
    }
    int dim = 0;
    const Leaf r = examine(ctx, b, depth, t, &dim);
    if (r != Leaf::Split) continue;
    if (max_width(b) == 0.0) {
      ++t.undecided;
      t.witness({b, std::nullopt, "degenerate box not decided"});
      continue;
    }
    if (b[dim].width() == 0.0) dim = widest_dimension(b);
    auto [left, right] = bisect(b, dim);
    if (depth >= ctx.config.max_depth) {
      // One extra bisection before giving up on the cell.
      const Leaf a = examine(ctx, left, depth + 1, t);
      const Leaf c = examine(ctx, right, depth + 1, t);
      if (a == Leaf::Split || c == Leaf::Split) {
        if (const auto enc = target_enclosure(ctx.task, b)) t.worst = std::max(t.worst, enc->hi());
        ++t.undecided;
        t.witness({b, std::nullopt, "max depth reached"});
      }
      continue;
    }
    stack.emplace_back(right, depth + 1);
    stack.emplace_back(left, depth + 1);
  }
}

std::vector<Box6> exception_boxes(const InequalityTask& task) {
  std::vector<Box6> out;
  for (const auto& e : task.exceptions) {
    if (!appendix_bound(e.center, e.radius).verified) continue;
    for (const auto& b : region_placements(e.center, e.radius)) out.push_back(b);
  }
  if (task.target == Target::RogersDensityLeDeltaOct && rogers_corner_monotone()) {
    Box6 corner = rogers_corner_box();
    corner[2] = task.domain[2];
    if (task.domain[2].subset_of(constants().sqrt2)) out.push_back(corner);
  }
  return out;
}

// Endpoint enclosures covering the decimal endpoints of a sign-change bracket.
Interval two_ulps_above(double x) { return {x, rounding::next_up(rounding::next_up(x))}; }
Interval two_ulps_below(double x) { return {rounding::next_down(rounding::next_down(x)), x}; }

VerifyOutcome sign_change_outcome(const InequalityTask& task) {
  int k = widest_dimension(task.domain);
  Box6 lo = task.domain;
  Box6 hi = task.domain;
  lo[k] = two_ulps_above(task.domain[k].lo());
  hi[k] = two_ulps_below(task.domain[k].hi());
  VerifyOutcome out;
  out.cells_processed = 2;
  const auto a = target_enclosure(task, lo);
  const auto b = target_enclosure(task, hi);
  const bool change = a && b &&
                      ((a->lo() > 0.0 && b->hi() < 0.0) || (a->hi() < 0.0 && b->lo() > 0.0));
  if (a && b) out.worst_upper_bound = std::max(a->hi(), b->hi());
  if (!change) {
    out.status = VerifyStatus::Undecided;
    out.undecided_cells = 1;
    out.witnesses.push_back({task.domain, std::nullopt,
                             "no strict sign change: " + (a ? to_string(*a) : std::string("undefined")) + " vs " +
                                 (b ? to_string(*b) : std::string("undefined"))});
  }
  return out;
}

}  // namespace

VerifyOutcome branch_and_bound(const InequalityTask& task, const VerifyConfig& config) {
  validate(task);
  if (config.max_depth < 0) throw std::invalid_argument("max_depth must be nonnegative");
  if (task.target == Target::SignChange) return sign_change_outcome(task);

  Context ctx{task, config, exception_boxes(task)};
  if (config.time_limit_seconds > 0.0)
    ctx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(config.time_limit_seconds));

  // Fixed root frontier, independent of the worker count.
  constexpr int kFrontierDepth = 6;
  std::vector<Box6> frontier{task.domain};
  int frontier_depth = 0;
  while (frontier_depth < std::min(kFrontierDepth, config.max_depth)) {
    if (max_width(frontier.front()) == 0.0) break;
    std::vector<Box6> next;
    for (const auto& b : frontier) {
      auto [l, r] = bisect(b, widest_dimension(b));
      next.push_back(l);
      next.push_back(r);
    }
    frontier = std::move(next);
    ++frontier_depth;
  }

  const std::uint64_t budget =
      config.max_cells ? std::max<std::uint64_t>(1, (config.max_cells + frontier.size() - 1) / frontier.size()) : 0;
  std::vector<Tally> tallies(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frontier.size(); i = next++)
      run_subtree(ctx, frontier[i], frontier_depth, budget, tallies[i]);
  };
  const int n_threads = std::clamp(config.workers, 1, static_cast<int>(frontier.size()));
  std::vector<std::thread> threads;
  for (int i = 1; i < n_threads; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  VerifyOutcome out;
  bool counterexample = false;
  for (auto& t : tallies) {
    out.cells_processed += t.cells;
    out.pruned += t.pruned;
    out.exception_leaves += t.exception_leaves;
    out.undecided_cells += t.undecided;
    out.max_depth = std::max(out.max_depth, t.max_depth);
    out.worst_upper_bound = std::max(out.worst_upper_bound, t.worst);
    counterexample = counterexample || t.counterexample;
    for (auto& w : t.witnesses)
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back(std::move(w));
  }
  if (counterexample) {
    out.status = VerifyStatus::CounterexampleCandidate;
    // Keep only the violating points.
    std::erase_if(out.witnesses, [](const Witness& w) { return !w.point; });
  } else if (out.undecided_cells > 0) {
    out.status = VerifyStatus::Undecided;
  } else {
    out.witnesses.clear();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builtin tasks

const std::vector<std::string>& cell_descriptions() {
  static const std::vector<std::string> cells{
      "L [2.06,2.51] I I I I",       "L I I [2.06,2.51] I I",
      "L I I I [2.08,2.51] I",       "[2.06,2.51] I I L I I",
      "I [2.08,2.51] I L I I",       "I I I L [2.2,2.51] I",
      "I I I [2.58,2√2] [2.12,2.51] I", "L I I I L I",
      "L I I I L L",                 "I I I L L I",
      "I I I L L L",
  };
  return cells;
}

Box6 cell_box(int cell) {
  if (cell < 1 || cell > 11) throw std::out_of_range("cell number must be 1..11");
  const Interval& t = close_neighbor();
  const double top = constants().two_sqrt2.hi();
  auto token_box = [&](const std::string& tok) -> Interval {
    if (tok == "I") return {2.0, t.hi()};
    if (tok == "L") return {t.lo(), top};
    // "[lo,hi]"
    const auto comma = tok.find(',');
    const std::string lo = tok.substr(1, comma - 1);
    const std::string hi = tok.substr(comma + 1, tok.size() - comma - 2);
    const double l = enclose_decimal(lo).lo();
    const double h = hi == "2√2" ? top : enclose_decimal(hi).hi();
    return {l, h};
  };
  Box6 b;
  std::size_t pos = 0;
  const std::string& d = cell_descriptions()[cell - 1];
  for (int k = 0; k < 6; ++k) {
    const auto end = d.find(' ', pos);
    b[k] = token_box(d.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    pos = end + 1;
  }
  return b;
}

std::vector<std::string> builtin_task_names() {
  std::vector<std::string> names{"calc451"};
  for (int i = 1; i <= 11; ++i) names.push_back("calc452-cell" + std::to_string(i));
  names.push_back("rogers-bound");
  names.push_back("remark34");
  return names;
}

InequalityTask builtin_task(const std::string& name) {
  InequalityTask t;
  t.name = name;
  if (name == "calc451") {
    t.target = Target::GammaLeZero;
    for (auto& c : t.domain) c = Interval(2.0, constants().two_sqrt2.hi());
    t.constraints = {Constraint::small_simplex(), Constraint::not_quasi_regular()};
    t.exceptions = {{ExceptionCenter::S0, 0.001}, {ExceptionCenter::S1, 0.01}};
    t.strictness = Strictness::Strict;
    return t;
  }
  if (name.rfind("calc452-cell", 0) == 0) {
    int cell = 0;
    try {
      std::size_t used = 0;
      cell = std::stoi(name.substr(12), &used);
      if (used != name.size() - 12) cell = 0;
    } catch (const std::exception&) {
      cell = 0;
    }
    if (cell < 1 || cell > 11) throw std::invalid_argument("unknown builtin task '" + name + "'");
    t.target = Target::VorLtZero;
    t.domain = cell_box(cell);
    t.constraints = {Constraint::small_simplex()};
    if (cell == 2) t.constraints.push_back(Constraint::rad_less_than(enclose_decimal("1.39")));
    t.strictness = Strictness::Strict;
    return t;
  }
  if (name == "rogers-bound") {
    t.target = Target::RogersDensityLeDeltaOct;
    t.domain[0] = Interval(1.0, enclose_decimal("1.18").hi());
    t.domain[1] = Interval(constants().two_over_sqrt3.lo(), constants().sqrt2.hi());
    t.domain[2] = constants().sqrt2;
    for (int k = 3; k < 6; ++k) t.domain[k] = Interval(0.0);
    t.strictness = Strictness::NonStrict;
    return t;
  }
  if (name == "remark34") {
    t.target = Target::SignChange;
    t.domain = {Interval(2.0), Interval(2.0), Interval(2.0), close_neighbor(), close_neighbor(),
                Interval(enclose_decimal("2.2603").lo(), enclose_decimal("2.2604").hi())};
    t.strictness = Strictness::Strict;
    return t;
  }
  throw std::invalid_argument("unknown builtin task '" + name + "'");
}

VerifyOutcome verify_calc_451(const VerifyConfig& config) { return branch_and_bound(builtin_task("calc451"), config); }

VerifyOutcome verify_calc_452(int cell, const VerifyConfig& config) {
  return branch_and_bound(builtin_task("calc452-cell" + std::to_string(cell)), config);
}

VerifyOutcome verify_rogers_bound(const VerifyConfig& config) {
  return branch_and_bound(builtin_task("rogers-bound"), config);
}

// ---------------------------------------------------------------------------
// Rogers corner

Box6 rogers_corner_box() {
  Box6 b;
  const Interval b0 = constants().two_over_sqrt3;
  b[0] = Interval(1.0, (Interval(1.0) + Interval(kRogersCornerWidth)).lo());
  b[1] = Interval(b0.lo(), (b0 + Interval(kRogersCornerWidth)).lo());
  b[2] = constants().sqrt2;
  for (int k = 3; k < 6; ++k) b[k] = Interval(0.0);
  return b;
}

namespace {

// Partial derivatives of log delta(a, b, c) in a and b, with
// Q = (b-a)(c-b) / ((a+b)(b+c)) and X = sqrt(Q).
std::optional<std::pair<Interval, Interval>> log_density_gradient(const Interval& a, const Interval& b,
                                                                  const Interval& c) {
  const Interval ab = a + b;
  const Interval bc = b + c;
  const Interval q = (b - a) * (c - b) / (ab * bc);
  if (q.lo() <= 0.0) return std::nullopt;
  const Interval x = sqrt(q);
  const Interval at = atan(x);
  const Interval k = (x / (1.0 + q) - at) / (2.0 * q * at);
  const Interval dq_da = (c - b) / bc * (-2.0 * b) / sqr(ab);
  const Interval dq_db = 2.0 * a / sqr(ab) * (c - b) / bc + (b - a) / ab * (-2.0 * c) / sqr(bc);
  const Interval da = k * dq_da - 1.0 / a - 1.0 / ab;
  const Interval db = k * dq_db - 1.0 / ab - 1.0 / bc;
  return std::make_pair(da, db);
}

bool gradient_negative(const Interval& a, const Interval& b, const Interval& c, int depth) {
  const auto g = log_density_gradient(a, b, c);
  if (g && g->first.hi() < 0.0 && g->second.hi() < 0.0) return true;
  if (depth == 0) return false;
  if (a.width() >= b.width()) {
    const double m = a.mid();
    return gradient_negative({a.lo(), m}, b, c, depth - 1) && gradient_negative({m, a.hi()}, b, c, depth - 1);
  }
  const double m = b.mid();
  return gradient_negative(a, {b.lo(), m}, c, depth - 1) && gradient_negative(a, {m, b.hi()}, c, depth - 1);
}

}  // namespace

bool rogers_corner_monotone() {
  static const bool ok = [] {
    const Box6 b = rogers_corner_box();
    return gradient_negative(b[0], b[1], b[2], 16);
  }();
  return ok;
}

// ---------------------------------------------------------------------------
// One-off interval checks

SignChangeResult bracket_root(const Interval& lo, const Interval& hi) {
  auto box_at = [](const Interval& x) {
    Box6 b{Interval(2.0), Interval(2.0), Interval(2.0), close_neighbor(), close_neighbor(), x};
    return b;
  };
  auto f = [&](const Interval& x) -> Interval {
    const auto v = eval_vor_I(box_at(x), 0);
    const auto g = eval_gamma_I(box_at(x));
    if (!v || !g) throw DegenerateError("bracket_root: enclosure undefined");
    return *v - *g;
  };
  SignChangeResult r;
  r.at_lo = f(lo);
  r.at_hi = f(hi);
  r.rad_at_hi = *eval_rad_I(box_at(hi));
  r.sign_change = (r.at_lo.lo() > 0.0 && r.at_hi.hi() < 0.0) || (r.at_lo.hi() < 0.0 && r.at_hi.lo() > 0.0);
  return r;
}

std::vector<SideCheck> side_inequalities() {
  std::vector<SideCheck> out;
  const Interval d_oct = delta_oct_interval();
  const Interval one(1.0);
  {
    const Interval v = *eval_rogers_density_I(one, enclose_decimal("1.207"), enclose_decimal("1.3045"));
    out.push_back({"delta(1,1.207,1.3045) < delta_oct", v, d_oct, v.hi() < d_oct.lo()});
  }
  {
    const Interval eta = *eval_eta_I(Interval(2.0), Interval(2.0), enclose_decimal("2.06"));
    const Interval v = *eval_rogers_density_I(one, eta, enclose_decimal("1.39"));
    out.push_back({"delta(1,eta(2,2,2.06),1.39) < delta_oct", v, d_oct, v.hi() < d_oct.lo()});
  }
  {
    const Interval v = *eval_eta_I(close_neighbor(), Interval(2.0), Interval(2.0));
    const Interval bound = enclose_decimal("1.207");
    out.push_back({"eta(2.51,2,2) > 1.207", v, bound, v.lo() > bound.hi()});
  }
  {
    const Box6 b{Interval(2.0), Interval(2.0), Interval(2.0), close_neighbor(), Interval(2.0), Interval(2.0)};
    const Interval v = *eval_rad_I(b);
    const Interval bound = enclose_decimal("1.3045");
    out.push_back({"rad(S(2,2,2,2.51,2,2)) > 1.3045", v, bound, v.lo() > bound.hi()});
  }
  return out;
}

Type3Bound type3_bound() {
  // rho(h) = sqrt2 / (h^2 + h sqrt2), rho'(h) = -sqrt2 (2h + sqrt2) / (h^2 + h sqrt2)^2.
  const Interval s2 = constants().sqrt2;
  const Interval h(1.0, enclose_decimal("1.18").hi());
  Type3Bound r;
  r.derivative = -s2 * (2.0 * h + s2) / sqr(sqr(h) + h * s2);
  r.value_at_1 = s2 / (1.0 + s2);
  const Interval limit = 2.0 - s2 + Interval(1e-12);
  r.verified = r.derivative.hi() < 0.0 && r.value_at_1.hi() <= limit.lo();
  return r;
}

bool constraints_hold(const std::array<double, 6>& y, const std::vector<Constraint>& constraints) {
  for (double e : y)
    if (!(e > 0.0)) return false;
  const OrderedSimplex s(y);
  for (int k = 0; k < 4; ++k) {
    const auto e = face_edges(k);
    const double p = y[e[0]], q = y[e[1]], r = y[e[2]];
    if (!(p + q > r && q + r > p && p + r > q)) return false;
  }
  if (!(delta(s.squared()) > 0.0)) return false;
  auto faces_at_most = [&](double limit) {
    for (int k = 0; k < 4; ++k)
      if (!(face_eta(s, k) <= limit)) return false;
    return true;
  };
  for (const auto& c : constraints) {
    switch (c.kind) {
      case Constraint::Kind::SmallSimplex:
        if (!faces_at_most(constants().sqrt2.hi())) return false;
        break;
      case Constraint::Kind::FaceEtaAtMost:
        if (!faces_at_most(c.value.hi())) return false;
        break;
      case Constraint::Kind::NotQuasiRegular:
        if (std::all_of(y.begin(), y.end(), [](double e) { return e <= 2.51; })) return false;
        break;
      case Constraint::Kind::RadLessThan:
        if (!(circumradius(s) < c.value.hi())) return false;
        break;
      case Constraint::Kind::CompressionFails: {
        int long_edge = -1;
        int count = 0;
        for (int k = 0; k < 6; ++k)
          if (y[k] > 2.51) {
            long_edge = k;
            ++count;
          }
        if (count == 1 && compression_conditions_hold(s, long_edge)) return false;
        break;
      }
    }
  }
  return true;
}

std::optional<double> target_value(const InequalityTask& task, const std::array<double, 6>& y) {
  try {
    switch (task.target) {
      case Target::GammaLeZero:
        return gamma(OrderedSimplex(y));
      case Target::VorLtZero:
        return vor_analytic(OrderedSimplex(y), task.vertex);
      case Target::RogersDensityLeDeltaOct:
        if (!(1.0 <= y[0] && y[0] <= y[1] && y[1] <= y[2])) return std::nullopt;
        return rogers_density(y[0], y[1], y[2]) - delta_oct();
      case Target::SignChange: {
        const OrderedSimplex s(y);
        return vor_analytic(s, task.vertex) - gamma(s);
      }
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

SampleCheck sample_check(const InequalityTask& task, std::uint64_t samples, std::uint64_t seed, double tolerance) {
  validate(task);
  SampleCheck out;
  // A bracket has no single sign to check.
  if (task.target == Target::SignChange) return out;
  const auto excluded = exception_boxes(task);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t n = 0; n < samples; ++n) {
    std::array<double, 6> y{};
    for (int k = 0; k < 6; ++k) {
      const Interval& c = task.domain[k];
      y[k] = std::clamp(c.lo() + unit(rng) * c.width(), c.lo(), c.hi());
    }
    ++out.drawn;
    if (edge_target(task.target) && !constraints_hold(y, task.constraints)) continue;
    const Box6 pb = point_box(y);
    if (std::any_of(excluded.begin(), excluded.end(), [&](const Box6& e) { return subset_of(pb, e); })) continue;
    const auto v = target_value(task, y);
    if (!v) continue;
    ++out.accepted;
    out.worst = std::max(out.worst, *v);
    const bool ok = task.strictness == Strictness::Strict ? *v < 0.0 : *v <= tolerance;
    if (!ok) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = y;
    }
  }
  return out;
}

std::vector<InequalityTask> random_subtasks(const InequalityTask& task, int count, double width, std::uint64_t seed) {
  validate(task);
  if (!(width > 0.0)) throw std::invalid_argument("random_subtasks: width must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<InequalityTask> out;
  for (int n = 0; n < count; ++n) {
    Box6 box = task.domain;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::array<double, 6> lo{};
      for (int k = 0; k < 6; ++k) {
        const Interval& c = task.domain[k];
        if (c.width() <= width) {
          box[k] = c;
        } else {
          lo[k] = c.lo() + unit(rng) * (c.width() - width);
          box[k] = Interval(lo[k], std::min(c.hi(), lo[k] + width));
        }
      }
      if (!edge_target(task.target) || constraints_hold(midpoint(box), task.constraints)) break;
    }
    InequalityTask t = task;
    t.name = task.name + "-sub" + std::to_string(n + 1);
    t.domain = box;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace octbound
