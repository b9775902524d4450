#pragma once

// Stars of the face-centered cubic and hexagonal close packings, built from
// the twelve neighbor coordinates of a ball at the origin, and a plain-text
// fixture format.
//
// Format, one record per line; blank lines and lines starting with '#' are
// ignored:
//
//   vertex X Y Z
//   cluster KIND Y1 Y2 Y3 Y4 Y5 Y6 [| Y1 ... Y6]...
//
// KIND is "qr" (one quasi-regular tetrahedron), "octahedron" (the pieces of a
// split quasi-regular octahedron) or "other". Each six-tuple lists the edge
// lengths of one simplex with the distinguished vertex first.

#include <string>
#include <vector>

#include "octbound/score.hpp"

namespace octbound {

struct FixtureCluster {
  std::string kind;  // qr | octahedron | other
  std::vector<OrderedSimplex> simplices;
};

struct Fixture {
  std::string name;
  std::vector<Vec3> vertices;  // origin first, then its neighbors
  std::vector<FixtureCluster> clusters;
};

std::vector<Vec3> fcc_neighbors();
std::vector<Vec3> hcp_neighbors();

// Delaunay star of the origin among its twelve touching neighbors: one
// cluster per mutually touching neighbor triple, one octahedron cluster per
// square of neighbors, split along the diagonal through the origin.
Fixture star_fixture(const std::string& name, const std::vector<Vec3>& neighbors);

// "fcc" or "hcp".
Fixture builtin_fixture(const std::string& name);

Star to_star(const Fixture& f);

std::string write_fixture(const Fixture& f);

// Throws std::invalid_argument with a line number on malformed input.
Fixture read_fixture(const std::string& text);

}  // namespace octbound
