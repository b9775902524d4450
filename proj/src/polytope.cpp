#include "octbound/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace octbound {

HalfSpace closer_to(Vec3 near, Vec3 far) {
  // |x-near|^2 <= |x-far|^2  <=>  2 (far-near).x <= |far|^2 - |near|^2
  return {2.0 * (far - near), dot(far, far) - dot(near, near)};
}

namespace {

constexpr double kEps = 1e-10;
constexpr double kGuard = 1e3;

std::optional<Vec3> solve3(const HalfSpace& a, const HalfSpace& b, const HalfSpace& c) {
  const Vec3 bc = cross(b.normal, c.normal);
  const double det = dot(a.normal, bc);
  if (std::fabs(det) < 1e-12) return std::nullopt;
  const Vec3 ca = cross(c.normal, a.normal);
  const Vec3 ab = cross(a.normal, b.normal);
  return (1.0 / det) * (a.offset * bc + b.offset * ca + c.offset * ab);
}

double scale_of(const HalfSpace& h) { return std::max(1.0, norm(h.normal)); }

}  // namespace

Polytope intersect_halfspaces(const std::vector<HalfSpace>& input) {
  std::vector<HalfSpace> hs = input;
  const std::size_t n_real = hs.size();
  // Guard cube; any vertex on it means the real intersection is unbounded.
  hs.push_back({{1, 0, 0}, kGuard});
  hs.push_back({{-1, 0, 0}, kGuard});
  hs.push_back({{0, 1, 0}, kGuard});
  hs.push_back({{0, -1, 0}, kGuard});
  hs.push_back({{0, 0, 1}, kGuard});
  hs.push_back({{0, 0, -1}, kGuard});

  std::vector<Vec3> verts;
  bool touches_guard = false;
  const std::size_t n = hs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto p = solve3(hs[i], hs[j], hs[k]);
        if (!p) continue;
        bool inside = true;
        for (const auto& h : hs)
          if (dot(h.normal, *p) - h.offset > kEps * scale_of(h)) {
            inside = false;
            break;
          }
        if (!inside) continue;
        const bool dup = std::any_of(verts.begin(), verts.end(), [&](Vec3 q) { return dist(q, *p) < 1e-9; });
        if (!dup) {
          verts.push_back(*p);
          if (k >= n_real) touches_guard = true;
        }
      }
  if (verts.size() < 4) return {};
  if (touches_guard) throw DegenerateError("intersect_halfspaces: unbounded intersection");

  Vec3 centroid{};
  for (const auto& v : verts) centroid = centroid + v;
  centroid = (1.0 / static_cast<double>(verts.size())) * centroid;

  // Volume: fan each facet polygon from its own centroid, cone to the
  // interior centroid.
  double vol = 0.0;
  for (std::size_t f = 0; f < n_real; ++f) {
    const HalfSpace& h = hs[f];
    std::vector<Vec3> on;
    for (const auto& v : verts)
      if (std::fabs(dot(h.normal, v) - h.offset) <= 1e-8 * scale_of(h)) on.push_back(v);
    if (on.size() < 3) continue;
    Vec3 fc{};
    for (const auto& v : on) fc = fc + v;
    fc = (1.0 / static_cast<double>(on.size())) * fc;
    const Vec3 nrm = (1.0 / norm(h.normal)) * h.normal;
    Vec3 u = on[0] - fc;
    u = (1.0 / norm(u)) * u;
    const Vec3 w = cross(nrm, u);
    std::sort(on.begin(), on.end(), [&](Vec3 a, Vec3 b) {
      return std::atan2(dot(a - fc, w), dot(a - fc, u)) < std::atan2(dot(b - fc, w), dot(b - fc, u));
    });
    for (std::size_t i = 0; i < on.size(); ++i) {
      const Vec3 a = on[i] - centroid;
      const Vec3 b = on[(i + 1) % on.size()] - centroid;
      const Vec3 c = fc - centroid;
      vol += std::fabs(dot(a, cross(b, c))) / 6.0;
    }
  }
  return {verts, vol};
}

}  // namespace octbound
