#pragma once

// Interval enclosures of the simplex functions in geometry.hpp. Each returns
// an interval containing the exact value for every simplex in the box, or
// std::nullopt when the enclosure cannot be formed on this box (a divisor or
// an a_i straddles zero); the caller is expected to split the box.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "octbound/interval.hpp"
#include "octbound/simplex.hpp"

namespace octbound {

// Product of six edge-length intervals in the OrderedSimplex edge order.
using Box6 = std::array<Interval, 6>;

Box6 point_box(const OrderedSimplex& s);
Box6 point_box(const std::array<double, 6>& y);
int widest_dimension(const Box6& b);
double max_width(const Box6& b);
std::pair<Box6, Box6> bisect(const Box6& b, int dim);
bool contains(const Box6& b, const std::array<double, 6>& y);
bool subset_of(const Box6& inner, const Box6& outer);
std::array<double, 6> midpoint(const Box6& b);
std::string to_string(const Box6& b);

struct ConstantEnclosures {
  Interval sqrt2;
  Interval two_sqrt2;
  Interval two_over_sqrt3;
  Interval pi;
  Interval acos_inv_sqrt3;
  Interval delta_oct;
  Interval pt;
};

const ConstantEnclosures& constants();

// Tightest enclosure of a decimal literal: exact when the decimal is a double,
// otherwise the two neighbouring doubles. Throws std::invalid_argument.
Interval enclose_decimal(const std::string& text);

// Decimal literal or one of the symbolic constants sqrt2, 2*sqrt2, 2/sqrt3.
Interval enclose_literal(const std::string& text);

Interval delta_oct_interval();

std::optional<Interval> eval_delta_I(const Box6& y);
Interval eval_a_vertex_I(const Box6& y, int i);
std::optional<Interval> eval_eta_I(const Interval& p, const Interval& q, const Interval& r);
std::optional<Interval> eval_face_eta_I(const Box6& y, int opposite_vertex);
// Squared face circumradius; avoids the final square root for threshold tests.
std::optional<Interval> eval_face_eta_sq_I(const Box6& y, int opposite_vertex);
std::optional<Interval> eval_rad_I(const Box6& y);
std::optional<Interval> eval_rad_sq_I(const Box6& y);
std::optional<Interval> eval_solid_angle_I(const Box6& y, int i);
// When `sensitivity` is given it receives |df/dy_k| * width_k per component
// (zeros if no derivative enclosure was available).
std::optional<Interval> eval_gamma_I(const Box6& y, std::array<double, 6>* sensitivity = nullptr);
std::optional<Interval> eval_vor_I(const Box6& y, int i, std::array<double, 6>* sensitivity = nullptr);
std::optional<Interval> eval_rogers_density_I(const Interval& a, const Interval& b, const Interval& c);

enum class AuxFunction { Delta, EtaFace, Rad, RogersDensity, AVertex };

// Uniform entry point. For EtaFace and AVertex `index` selects the face
// (opposite vertex) or vertex; for RogersDensity the first three box
// components hold a, b, c.
std::optional<Interval> eval_aux_I(AuxFunction which, const Box6& b, int index = 0);

}  // namespace octbound
