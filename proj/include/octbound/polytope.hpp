#pragma once

#include <vector>

#include "octbound/simplex.hpp"

namespace octbound {

// The closed half-space {x : normal . x <= offset}.
struct HalfSpace {
  Vec3 normal;
  double offset = 0.0;
};

// Half-space {x : |x - near| <= |x - far|}.
HalfSpace closer_to(Vec3 near, Vec3 far);

struct Polytope {
  std::vector<Vec3> vertices;
  double volume = 0.0;
};

// Bounded intersection of half-spaces by vertex enumeration. Returns an empty
// polytope (no vertices, zero volume) when the intersection has no interior.
// Throws DegenerateError when the intersection is unbounded.
Polytope intersect_halfspaces(const std::vector<HalfSpace>& halfspaces);

}  // namespace octbound
