#include "octbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace octbound {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& why) { throw TaskFormatError("task file: " + why); }

Target target_from_string(const std::string& s) {
  for (Target t : {Target::GammaLeZero, Target::VorLtZero, Target::RogersDensityLeDeltaOct, Target::SignChange})
    if (to_string(t) == s) return t;
  bad("unknown target '" + s + "'");
}

Strictness strictness_from_string(const std::string& s) {
  if (s == "strict") return Strictness::Strict;
  if (s == "nonstrict") return Strictness::NonStrict;
  bad("unknown strictness '" + s + "'");
}

std::string literal_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) {
    // Numbers are read back through their shortest round-trip text.
    std::string s = json(j.get<double>()).dump();
    return s;
  }
  bad("endpoint must be a string or a number, got " + j.dump());
}

Interval literal(const std::string& s) {
  try {
    return enclose_literal(s);
  } catch (const std::invalid_argument&) {
    bad("bad literal '" + s + "'");
  }
}

Interval value_literal(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return literal(s);
  const double lo = literal(s.substr(0, dots)).lo();
  const double hi = literal(s.substr(dots + 2)).hi();
  if (!(lo <= hi)) bad("empty interval '" + s + "'");
  return {lo, hi};
}

std::string value_text(const Interval& v) {
  for (const char* sym : {"sqrt2", "2*sqrt2", "2/sqrt3"}) {
    const Interval e = enclose_literal(sym);
    if (e.lo() == v.lo() && e.hi() == v.hi()) return sym;
  }
  for (int p = 1; p <= 17; ++p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", p, v.mid());
    const Interval e = enclose_decimal(buf);
    if (e.lo() == v.lo() && e.hi() == v.hi()) return buf;
  }
  return endpoint_literal(v.lo(), false) + ".." + endpoint_literal(v.hi(), true);
}

Constraint constraint_from_tag(const std::string& tag) {
  if (tag == "small-simplex") return Constraint::small_simplex();
  if (tag == "not-quasi-regular") return Constraint::not_quasi_regular();
  if (tag == "compression-fails") return Constraint::compression_fails();
  const auto colon = tag.find(':');
  if (colon != std::string::npos) {
    const std::string head = tag.substr(0, colon);
    const std::string value = tag.substr(colon + 1);
    if (head == "rad-less-than") return Constraint::rad_less_than(value_literal(value));
    if (head == "face-eta-at-most") return Constraint::face_eta_at_most(value_literal(value));
  }
  bad("unknown constraint tag '" + tag + "'");
}

std::string constraint_tag(const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::SmallSimplex:
      return "small-simplex";
    case Constraint::Kind::NotQuasiRegular:
      return "not-quasi-regular";
    case Constraint::Kind::CompressionFails:
      return "compression-fails";
    case Constraint::Kind::RadLessThan:
      return "rad-less-than:" + value_text(c.value);
    case Constraint::Kind::FaceEtaAtMost:
      return "face-eta-at-most:" + value_text(c.value);
  }
  return "?";
}

json box_json(const Box6& b) {
  json out = json::array();
  for (const auto& c : b) out.push_back({endpoint_literal(c.lo(), false), endpoint_literal(c.hi(), true)});
  return out;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string endpoint_literal(double v, bool upper) {
  for (const char* sym : {"sqrt2", "2*sqrt2", "2/sqrt3"}) {
    const Interval e = enclose_literal(sym);
    if ((upper ? e.hi() : e.lo()) == v) return sym;
  }
  for (int p = 1; p <= 17; ++p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    const Interval e = enclose_decimal(buf);
    if ((upper ? e.hi() : e.lo()) == v) return buf;
  }
  // Exact decimal expansion; always representable.
  std::string s(1200, '\0');
  const int n = std::snprintf(s.data(), s.size(), "%.1074f", v);
  s.resize(static_cast<std::size_t>(n));
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

InequalityTask parse_task(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "target" && key != "box" && key != "constraints" && key != "exceptions" &&
        key != "strictness" && key != "vertex")
      bad("unknown field '" + key + "'");

  InequalityTask t;
  if (!j.contains("name") || !j["name"].is_string()) bad("missing string field 'name'");
  t.name = j["name"].get<std::string>();
  if (!j.contains("target") || !j["target"].is_string()) bad("missing string field 'target'");
  t.target = target_from_string(j["target"].get<std::string>());

  if (!j.contains("box") || !j["box"].is_array() || j["box"].size() != 6) bad("'box' must hold six [lo, hi] pairs");
  for (int k = 0; k < 6; ++k) {
    const json& c = j["box"][k];
    if (!c.is_array() || c.size() != 2) bad("box component " + std::to_string(k) + " is not a [lo, hi] pair");
    const double lo = literal(literal_text(c[0])).lo();
    const double hi = literal(literal_text(c[1])).hi();
    if (!(lo <= hi)) bad("box component " + std::to_string(k) + " is empty");
    t.domain[k] = Interval(lo, hi);
  }

  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) bad("'constraints' must be an array of tags");
    for (const auto& c : j["constraints"]) {
      if (!c.is_string()) bad("constraint tags must be strings");
      t.constraints.push_back(constraint_from_tag(c.get<std::string>()));
    }
  }
  if (j.contains("exceptions")) {
    if (!j["exceptions"].is_array()) bad("'exceptions' must be an array");
    for (const auto& e : j["exceptions"]) {
      if (!e.is_object() || !e.contains("center") || !e["center"].is_string() || !e.contains("radius") ||
          !e["radius"].is_number())
        bad("exceptions need a string 'center' and a numeric 'radius'");
      ExceptionRegion r;
      try {
        r.center = exception_center_from_string(e["center"].get<std::string>());
      } catch (const std::exception&) {
        bad("unknown exception center '" + e["center"].get<std::string>() + "'");
      }
      r.radius = e["radius"].get<double>();
      t.exceptions.push_back(r);
    }
  }
  if (j.contains("strictness")) {
    if (!j["strictness"].is_string()) bad("'strictness' must be a string");
    t.strictness = strictness_from_string(j["strictness"].get<std::string>());
  }
  if (j.contains("vertex")) {
    if (!j["vertex"].is_number_integer()) bad("'vertex' must be an integer");
    t.vertex = j["vertex"].get<int>();
  }
  try {
    validate(t);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return t;
}

std::string task_to_json(const InequalityTask& t) {
  json j;
  j["name"] = t.name;
  j["target"] = to_string(t.target);
  j["box"] = box_json(t.domain);
  j["constraints"] = json::array();
  for (const auto& c : t.constraints) j["constraints"].push_back(constraint_tag(c));
  j["exceptions"] = json::array();
  for (const auto& e : t.exceptions) j["exceptions"].push_back({{"center", to_string(e.center)}, {"radius", e.radius}});
  j["strictness"] = to_string(t.strictness);
  j["vertex"] = t.vertex;
  return j.dump(2);
}

const char* tool_version() { return OCTBOUND_VERSION; }

std::string report_json(const Report& r) {
  json j;
  j["task_name"] = r.task.name;
  j["status"] = to_string(r.outcome.status);
  j["cells_processed"] = r.outcome.cells_processed;
  j["cells_pruned"] = r.outcome.pruned;
  j["exception_leaves"] = r.outcome.exception_leaves;
  j["undecided_cells"] = r.outcome.undecided_cells;
  j["max_depth_reached"] = r.outcome.max_depth;
  j["worst_upper_bound"] = number_or_null(r.outcome.worst_upper_bound);
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["tool_version"] = tool_version();
  j["config"] = {{"max_depth", r.config.max_depth},
                 {"tolerance", r.config.tolerance},
                 {"jobs", r.config.workers},
                 {"max_cells", r.config.max_cells},
                 {"seed", r.seed}};
  if (r.samples) {
    const SampleCheck& sc = *r.samples;
    j["sample_check"] = {{"drawn", sc.drawn},
                         {"accepted", sc.accepted},
                         {"violations", sc.violations},
                         {"worst_value", number_or_null(sc.worst)}};
  }
  j["task"] = json::parse(r.task_json.empty() ? task_to_json(r.task) : r.task_json);
  j["witnesses"] = json::array();
  for (const auto& w : r.outcome.witnesses) {
    json wj;
    wj["box"] = json::array();
    for (const auto& c : w.box) wj["box"].push_back({c.lo(), c.hi()});
    wj["point"] = w.point ? json(*w.point) : json(nullptr);
    wj["reason"] = w.reason;
    j["witnesses"].push_back(std::move(wj));
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const Report& r) {
  auto num = [](double v) {
    if (!std::isfinite(v)) return std::string(v < 0 ? "-inf" : "inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::string name = r.task.name;
  if (name.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : name) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    name = q + "\"";
  }
  std::ostringstream out;
  out << "task_name,status,cells_processed,cells_pruned,exception_leaves,undecided_cells,max_depth_reached,"
         "worst_upper_bound,elapsed_seconds,tool_version,max_depth,tolerance,jobs,max_cells,seed\n";
  out << name << ',' << to_string(r.outcome.status) << ',' << r.outcome.cells_processed << ',' << r.outcome.pruned
      << ',' << r.outcome.exception_leaves << ',' << r.outcome.undecided_cells << ',' << r.outcome.max_depth << ','
      << num(r.outcome.worst_upper_bound) << ',' << num(r.elapsed_seconds) << ',' << tool_version() << ','
      << r.config.max_depth << ',' << num(r.config.tolerance) << ',' << r.config.workers << ',' << r.config.max_cells
      << ',' << r.seed << "\n";
  return out.str();
}

}  // namespace octbound
