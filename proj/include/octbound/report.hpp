#pragma once

// JSON task files and verification reports.
//
// A task file is a JSON object:
//
//   {
//     "name": "cell",
//     "target": "vor-lt-zero",            // gamma-le-zero | vor-lt-zero |
//                                         // rogers-density-le-delta-oct | sign-change
//     "box": [["2.51", "2*sqrt2"], ...],  // six [lo, hi] pairs
//     "constraints": ["small-simplex", "rad-less-than:1.39"],
//     "exceptions": [{"center": "S0", "radius": 0.001}],
//     "strictness": "strict",             // strict | nonstrict
//     "vertex": 0
//   }
//
// Endpoints are decimal strings (or JSON numbers) or one of sqrt2, 2*sqrt2,
// 2/sqrt3. A lower endpoint is rounded down and an upper endpoint up, so the
// parsed box always contains the written one. Constraint tags are
// small-simplex, not-quasi-regular, compression-fails, rad-less-than:V and
// face-eta-at-most:V, where V is a literal or LO..HI.

#include <optional>
#include <string>

#include "octbound/verifier.hpp"

namespace octbound {

class TaskFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

InequalityTask parse_task(const std::string& json_text);

// Serializes a task so that parse_task gives it back exactly. Endpoints are
// written as the shortest literal that parses back to the same double.
std::string task_to_json(const InequalityTask& task);

// Shortest literal whose lower (upper) enclosure endpoint is exactly v.
std::string endpoint_literal(double v, bool upper);

struct Report {
  InequalityTask task;
  std::string task_json;  // echo of the task as given
  VerifyConfig config;
  VerifyOutcome outcome;
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;
  std::optional<SampleCheck> samples;  // scalar cross-check, when requested
};

std::string report_json(const Report& r);
std::string report_csv(const Report& r);

const char* tool_version();

}  // namespace octbound
