#pragma once

// Interval branch-and-bound proofs of inequalities over boxes of edge lengths.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "octbound/appendix.hpp"
#include "octbound/interval_geometry.hpp"

namespace octbound {

enum class Target { GammaLeZero, VorLtZero, RogersDensityLeDeltaOct, SignChange };
enum class Strictness { Strict, NonStrict };

std::string to_string(Target t);
std::string to_string(Strictness s);

struct Constraint {
  enum class Kind { SmallSimplex, NotQuasiRegular, RadLessThan, FaceEtaAtMost, CompressionFails };
  Kind kind = Kind::SmallSimplex;
  Interval value;  // threshold for RadLessThan / FaceEtaAtMost

  static Constraint small_simplex() { return {Kind::SmallSimplex, {}}; }
  static Constraint not_quasi_regular() { return {Kind::NotQuasiRegular, {}}; }
  static Constraint rad_less_than(Interval r) { return {Kind::RadLessThan, r}; }
  static Constraint face_eta_at_most(Interval r) { return {Kind::FaceEtaAtMost, r}; }
  static Constraint compression_fails() { return {Kind::CompressionFails, {}}; }
};

struct ExceptionRegion {
  ExceptionCenter center = ExceptionCenter::S0;
  double radius = 0.001;
};

// For RogersDensityLeDeltaOct the first three box components are (a, b, c)
// and the rest are unused zeros. For SignChange exactly one component has
// positive width and the sign of vor - Gamma is compared at its endpoints.
struct InequalityTask {
  std::string name;
  Target target = Target::GammaLeZero;
  Box6 domain{};
  std::vector<Constraint> constraints;
  std::vector<ExceptionRegion> exceptions;
  Strictness strictness = Strictness::Strict;
  int vertex = 0;  // vertex at which vor is taken
};

// Throws std::invalid_argument when the task is malformed.
void validate(const InequalityTask& task);

struct VerifyConfig {
  int max_depth = 40;
  double tolerance = 0.0;  // slack for non-strict targets
  int workers = 1;
  std::uint64_t max_cells = 0;  // 0 = unlimited
  double time_limit_seconds = 0.0;  // 0 = unlimited; hitting it leaves cells undecided
};

enum class VerifyStatus { Verified, Undecided, CounterexampleCandidate };

std::string to_string(VerifyStatus s);

struct Witness {
  Box6 box{};
  std::optional<std::array<double, 6>> point;
  std::string reason;
};

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::Verified;
  std::uint64_t cells_processed = 0;
  std::uint64_t pruned = 0;
  std::uint64_t exception_leaves = 0;
  int max_depth = 0;
  // Largest enclosure upper bound over decided leaves and over cells given up
  // at the depth limit; -inf when no leaf had a defined enclosure.
  double worst_upper_bound = -std::numeric_limits<double>::infinity();
  std::vector<Witness> witnesses;
  std::uint64_t undecided_cells = 0;
};

// Cap on stored witnesses; counts are always complete.
inline constexpr std::size_t kMaxWitnesses = 64;

enum class Feasibility { Infeasible, Feasible, Unknown };

// Infeasible only when some constraint provably fails on all of b, or b
// contains no realizable simplex. Feasible when every constraint provably holds.
Feasibility constraint_prune(const Box6& b, const std::vector<Constraint>& constraints);

// Enclosure of the task's target function (the quantity that must be < 0 or
// <= 0) over b; nullopt when the enclosure is not defined on b.
std::optional<Interval> target_enclosure(const InequalityTask& task, const Box6& b);

// Scalar counterparts used for sampling cross-checks. constraints_hold is
// false for points that do not form a simplex; target_value is nullopt where
// the target is undefined (or outside a <= b <= c for the Rogers target).
bool constraints_hold(const std::array<double, 6>& y, const std::vector<Constraint>& constraints);
std::optional<double> target_value(const InequalityTask& task, const std::array<double, 6>& y);

struct SampleCheck {
  std::uint64_t drawn = 0;
  std::uint64_t accepted = 0;    // passed the constraints and lie outside exception boxes
  std::uint64_t violations = 0;  // accepted samples where the inequality fails
  double worst = -std::numeric_limits<double>::infinity();
  std::optional<std::array<double, 6>> first_violation;
};

// Uniform samples from the task domain with constraint rejection.
SampleCheck sample_check(const InequalityTask& task, std::uint64_t samples, std::uint64_t seed,
                         double tolerance = 0.0);

// Sub-tasks on random sub-boxes of the domain, each component at most
// `width` wide. Box centers are drawn until they satisfy the constraints
// (bounded number of tries), so most sub-boxes meet the feasible region.
std::vector<InequalityTask> random_subtasks(const InequalityTask& task, int count, double width, std::uint64_t seed);

VerifyOutcome branch_and_bound(const InequalityTask& task, const VerifyConfig& config = {});

// Builtin tasks: calc451, calc452-cell1..calc452-cell11, rogers-bound, remark34.
std::vector<std::string> builtin_task_names();
InequalityTask builtin_task(const std::string& name);

// The eleven cells as printed by the `cells` command.
const std::vector<std::string>& cell_descriptions();
Box6 cell_box(int cell);  // 1-based

VerifyOutcome verify_calc_451(const VerifyConfig& config = {});
VerifyOutcome verify_calc_452(int cell, const VerifyConfig& config = {});
VerifyOutcome verify_rogers_bound(const VerifyConfig& config = {});

// Corner of the Rogers bound where equality holds, and the exception box
// around it on which the log-density is checked to decrease in a and b.
inline constexpr double kRogersCornerWidth = 0.02;
Box6 rogers_corner_box();
bool rogers_corner_monotone();

struct SignChangeResult {
  Interval at_lo;
  Interval at_hi;
  Interval rad_at_hi;
  bool sign_change = false;
};

// f(x) = vor(S(2,2,2,2.51,2.51,x), 0) - Gamma(S(2,2,2,2.51,2.51,x)) at the two
// endpoints of [lo, hi].
SignChangeResult bracket_root(const Interval& lo, const Interval& hi);

struct SideCheck {
  std::string name;
  Interval value;
  Interval bound;
  bool verified = false;
};

// The four one-off interval inequalities for type 1 pieces.
std::vector<SideCheck> side_inequalities();

struct Type3Bound {
  Interval value_at_1;      // density at h = 1
  Interval derivative;      // enclosure of the derivative over [1, 1.18]
  bool verified = false;    // derivative < 0 and value_at_1 <= 2 - sqrt2 + 1e-12
};

Type3Bound type3_bound();

}  // namespace octbound
