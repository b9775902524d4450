#include "octbound/fixture.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace octbound {

namespace {

constexpr double kTouch = 1e-9;

bool touching(Vec3 a, Vec3 b) { return std::fabs(dist(a, b) - 2.0) < kTouch; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Coordinates carry rounding; the ideal stars only have edges 2 and 2 sqrt 2.
OrderedSimplex snapped(const OrderedSimplex& s) {
  std::array<double, 6> y = s.edges();
  for (double& e : y) {
    if (std::fabs(e - 2.0) < kTouch) e = 2.0;
    if (std::fabs(e - kTwoSqrt2) < kTouch) e = kTwoSqrt2;
  }
  return OrderedSimplex(y);
}

}  // namespace

std::vector<Vec3> fcc_neighbors() {
  const double s = std::sqrt(2.0);
  std::vector<Vec3> out;
  for (int zero = 0; zero < 3; ++zero)
    for (int a : {-1, 1})
      for (int b : {-1, 1}) {
        double c[3];
        c[zero] = 0.0;
        c[(zero + 1) % 3] = a * s;
        c[(zero + 2) % 3] = b * s;
        out.push_back({c[0], c[1], c[2]});
      }
  return out;
}

std::vector<Vec3> hcp_neighbors() {
  const double pi = std::acos(-1.0);
  std::vector<Vec3> out;
  for (int k = 0; k < 6; ++k) out.push_back({2.0 * std::cos(k * pi / 3.0), 2.0 * std::sin(k * pi / 3.0), 0.0});
  // The layers above and below sit over the same triangle centers.
  const double r = 2.0 / std::sqrt(3.0);
  const double h = 2.0 * std::sqrt(2.0 / 3.0);
  for (double z : {h, -h})
    for (int k = 0; k < 3; ++k) {
      const double t = pi / 6.0 + k * 2.0 * pi / 3.0;
      out.push_back({r * std::cos(t), r * std::sin(t), z});
    }
  return out;
}

Fixture star_fixture(const std::string& name, const std::vector<Vec3>& nb) {
  const Vec3 origin{};
  for (const auto& p : nb)
    if (!touching(origin, p)) throw PreconditionError("star_fixture: neighbor not at distance 2 from the origin");
  Fixture f;
  f.name = name;
  f.vertices.push_back(origin);
  f.vertices.insert(f.vertices.end(), nb.begin(), nb.end());

  const std::size_t n = nb.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (touching(nb[i], nb[j]) && touching(nb[j], nb[k]) && touching(nb[i], nb[k]))
          f.clusters.push_back({"qr", {snapped(simplex_from_points(origin, nb[i], nb[j], nb[k]))}});

  // Squares a-b-c-d: consecutive neighbors touch, diagonals are 2 sqrt 2 and
  // share a midpoint. Each square is found once with a as its lowest index
  // and b < d.
  const double diag = 2.0 * std::sqrt(2.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      if (std::fabs(dist(nb[a], nb[c]) - diag) > kTouch) continue;
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t d = b + 1; d < n; ++d) {
          if (b == c || d == c) continue;
          if (!touching(nb[a], nb[b]) || !touching(nb[b], nb[c]) || !touching(nb[c], nb[d]) ||
              !touching(nb[d], nb[a]))
            continue;
          const Vec3 apex = nb[a] + nb[c];
          if (dist(apex, nb[b] + nb[d]) > kTouch) continue;
          const auto pieces = octahedron_split({origin, apex, nb[a], nb[b], nb[c], nb[d]});
          FixtureCluster c{"octahedron", {}};
          for (const auto& p : pieces) c.simplices.push_back(snapped(p));
          f.clusters.push_back(std::move(c));
        }
    }
  return f;
}

Fixture builtin_fixture(const std::string& name) {
  if (name == "fcc") return star_fixture(name, fcc_neighbors());
  if (name == "hcp") return star_fixture(name, hcp_neighbors());
  throw std::invalid_argument("unknown fixture '" + name + "' (expected fcc or hcp)");
}

Star to_star(const Fixture& f) {
  std::vector<Cluster> clusters;
  for (const auto& c : f.clusters) {
    if (c.kind == "qr")
      clusters.push_back(Cluster::make(ClusterKind::QuasiRegularTetrahedron, c.simplices));
    else if (c.kind == "octahedron")
      clusters.push_back(Cluster::make(ClusterKind::Other, c.simplices, true));
    else if (c.kind == "other")
      clusters.push_back(Cluster::make(ClusterKind::Other, c.simplices));
    else
      throw std::invalid_argument("unknown cluster kind '" + c.kind + "'");
  }
  return Star(std::move(clusters));
}

std::string write_fixture(const Fixture& f) {
  std::ostringstream out;
  out << "# fixture " << f.name << "\n";
  for (const auto& v : f.vertices) out << "vertex " << fmt(v.x) << ' ' << fmt(v.y) << ' ' << fmt(v.z) << "\n";
  for (const auto& c : f.clusters) {
    out << "cluster " << c.kind;
    for (std::size_t i = 0; i < c.simplices.size(); ++i) {
      if (i) out << " |";
      for (double y : c.simplices[i].edges()) out << ' ' << fmt(y);
    }
    out << "\n";
  }
  return out.str();
}

Fixture read_fixture(const std::string& text) {
  Fixture f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') {
      if (tag == "#" && f.name.empty()) {
        std::string word;
        if (ls >> word && word == "fixture") ls >> f.name;
      }
      continue;
    }
    if (tag == "vertex") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z)) fail("expected three coordinates");
      std::string extra;
      if (ls >> extra) fail("trailing text '" + extra + "'");
      f.vertices.push_back(v);
    } else if (tag == "cluster") {
      FixtureCluster c;
      if (!(ls >> c.kind)) fail("missing cluster kind");
      if (c.kind != "qr" && c.kind != "octahedron" && c.kind != "other") fail("unknown cluster kind '" + c.kind + "'");
      std::vector<double> cur;
      std::string tok;
      auto flush = [&] {
        if (cur.size() != 6) fail("a simplex needs six edge lengths");
        std::array<double, 6> y{};
        std::copy(cur.begin(), cur.end(), y.begin());
        try {
          c.simplices.emplace_back(y);
        } catch (const std::exception& e) {
          fail(e.what());
        }
        cur.clear();
      };
      while (ls >> tok) {
        if (tok == "|") {
          flush();
          continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(tok, &used);
        } catch (const std::exception&) {
          fail("bad number '" + tok + "'");
        }
        if (used != tok.size()) fail("bad number '" + tok + "'");
        cur.push_back(v);
      }
      flush();
      f.clusters.push_back(std::move(c));
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  return f;
}

}  // namespace octbound
