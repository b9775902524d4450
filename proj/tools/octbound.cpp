#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "octbound/fixture.hpp"
#include "octbound/report.hpp"
#include "octbound/score.hpp"

using namespace octbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotVerified = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

// Rounded to six decimals, with negative zero shown as zero.
std::string pt_text(double value) {
  double m = value / pt();
  if (std::fabs(m) < 5e-7) m = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f pt", m);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct VerifyArgs {
  std::string builtin;
  std::string task_file;
  int max_depth = 40;
  double tol = 0.0;
  int jobs = 1;
  std::uint64_t max_cells = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
};

int cmd_verify(const VerifyArgs& a, bool seed_given) {
  if (a.builtin.empty() == a.task_file.empty()) throw UsageError("give exactly one of --builtin or --task");
  Report r;
  if (!a.builtin.empty()) {
    try {
      r.task = builtin_task(a.builtin);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    r.task_json = read_file(a.task_file);
    try {
      r.task = parse_task(r.task_json);
    } catch (const TaskFormatError& e) {
      throw UsageError(e.what());
    }
  }
  r.config.max_depth = a.max_depth;
  r.config.tolerance = a.tol;
  r.config.workers = a.jobs;
  r.config.max_cells = a.max_cells;
  r.seed = a.seed;

  const auto start = std::chrono::steady_clock::now();
  r.outcome = branch_and_bound(r.task, r.config);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool samples_ok = true;
  if (seed_given && r.task.target != Target::SignChange) {
    r.samples = sample_check(r.task, a.samples, a.seed, a.tol);
    samples_ok = r.samples->violations == 0;
    if (!samples_ok)
      std::cerr << "warning: " << r.samples->violations << " sampled points violate the inequality\n";
  }

  write_output(a.out, a.format == "csv" ? report_csv(r) : report_json(r));
  std::cerr << r.task.name << ": " << to_string(r.outcome.status) << " (" << r.outcome.cells_processed
            << " cells, depth " << r.outcome.max_depth << ", " << r.elapsed_seconds << " s)\n";
  return r.outcome.status == VerifyStatus::Verified && samples_ok ? kExitOk : kExitNotVerified;
}

std::string describe_mode(const SimplexClass& cls, const OrderedSimplex& s) {
  switch (cls.kind) {
    case SimplexKind::QuasiRegularTetrahedron:
      return circumradius(s) <= kVoronoiRadiusThreshold ? "compression" : "voronoi";
    case SimplexKind::SmallNonQR:
      return to_string(compression_rule(s));
    case SimplexKind::Other:
      break;
  }
  return "voronoi";
}

int score_simplex_cmd(const std::vector<double>& edges, const std::string& mode) {
  if (edges.size() != 6) throw UsageError("--simplex needs six comma-separated edge lengths");
  std::array<double, 6> y{};
  std::copy(edges.begin(), edges.end(), y.begin());
  for (double e : y)
    if (!(e >= 2.0)) throw UsageError("edge lengths must be at least 2");
  try {
    const OrderedSimplex s(y);
    const SimplexClass cls = classify(s);
    double value = 0.0;
    std::string used;
    if (mode == "gamma") {
      value = gamma(s);
      used = "compression";
    } else if (mode == "vor") {
      value = vor_analytic(s, 0);
      used = "voronoi";
    } else {
      used = describe_mode(cls, s);
      if (cls.kind == SimplexKind::Other)
        value = vor_analytic(s, 0);
      else
        value = score_simplex(s, cls.kind == SimplexKind::SmallNonQR ? compression_rule(s) : ScoringMode::Compression);
    }
    std::cout << "simplex " << s.to_string() << "\n"
              << "class   " << to_string(cls.kind) << "\n"
              << "mode    " << used << "\n"
              << "score   " << full(value) << "\n"
              << pt_text(value) << "\n";
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

Fixture load_fixture(const std::string& name) {
  if (name == "fcc" || name == "hcp") return builtin_fixture(name);
  try {
    return read_fixture(read_file(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int score_fixture_cmd(const std::string& name) {
  const Fixture f = load_fixture(name);
  const Star star = to_star(f);
  int qr = 0;
  int other = 0;
  for (const auto& c : f.clusters) (c.kind == "qr" ? qr : other)++;
  const double value = score_star(star);
  std::cout << "fixture " << (f.name.empty() ? name : f.name) << "\n"
            << "clusters " << f.clusters.size() << " (" << qr << " quasi-regular tetrahedra, " << other << " other)\n"
            << "score   " << full(value) << "\n"
            << pt_text(value) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval verification and scoring for the octahedral density bound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a branch-and-bound verification task");
  verify->add_option("--builtin", va.builtin, "Builtin task name");
  verify->add_option("--task", va.task_file, "Task file (JSON)");
  verify->add_option("--max-depth", va.max_depth, "Maximum subdivision depth")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", va.tol, "Slack for non-strict targets")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-cells", va.max_cells, "Cell budget, 0 for unlimited");
  verify->add_option("--out", va.out, "Report file (default: standard output)");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = verify->add_option("--seed", va.seed, "Seed for a scalar sampling cross-check");
  verify->add_option("--samples", va.samples, "Samples drawn for the cross-check");

  std::vector<double> simplex;
  std::string fixture;
  std::string mode = "auto";
  auto* score = app.add_subcommand("score", "Score a simplex or a fixture star");
  auto* simplex_opt = score->add_option("--simplex", simplex, "Six edge lengths y1,...,y6")->delimiter(',');
  auto* fixture_opt = score->add_option("--fixture", fixture, "fcc, hcp or a fixture file");
  simplex_opt->excludes(fixture_opt);
  score->add_option("--mode", mode, "Scoring mode")->check(CLI::IsMember({"auto", "gamma", "vor"}));

  app.add_subcommand("cells", "List the eleven cells of the vor < 0 calculation");

  std::string fixture_name;
  std::string fixture_out;
  auto* fix = app.add_subcommand("fixture", "Write a builtin fixture star");
  fix->add_option("name", fixture_name, "fcc or hcp")->required()->check(CLI::IsMember({"fcc", "hcp"}));
  fix->add_option("--out", fixture_out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, seed_opt->count() > 0);
    if (score->parsed()) {
      if (simplex_opt->count()) return score_simplex_cmd(simplex, mode);
      if (fixture_opt->count()) {
        if (mode != "auto") throw UsageError("--mode applies to --simplex only");
        return score_fixture_cmd(fixture);
      }
      throw UsageError("give --simplex or --fixture");
    }
    if (fix->parsed()) {
      write_output(fixture_out, write_fixture(builtin_fixture(fixture_name)));
      return kExitOk;
    }
    for (const auto& line : cell_descriptions()) std::cout << line << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
