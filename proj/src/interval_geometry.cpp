#include "octbound/interval_geometry.hpp"

#include <cstdio>
#include <sstream>
#include <type_traits>

#include "octbound/formulas.hpp"
#include "octbound/gradient.hpp"

namespace octbound {

namespace {

using formulas::Six;

Six<Interval> squares(const Box6& y) {
  Six<Interval> x;
  for (int k = 0; k < 6; ++k) x[k] = sqr(y[k]);
  return x;
}

void require_unit_separation(const Box6& y, const char* who) {
  for (const auto& e : y)
    if (e.lo() < 2.0) throw PreconditionError(std::string(who) + ": edge interval below 2");
}

std::optional<Interval> sol_from(const Interval& root, const Interval& a) {
  if (a.lo() <= 0.0) return std::nullopt;
  return 2.0 * atan(root / (2.0 * a));
}

}  // namespace

Box6 point_box(const std::array<double, 6>& y) {
  Box6 b;
  for (int k = 0; k < 6; ++k) b[k] = Interval(y[k]);
  return b;
}

Box6 point_box(const OrderedSimplex& s) { return point_box(s.edges()); }

int widest_dimension(const Box6& b) {
  int best = 0;
  for (int k = 1; k < 6; ++k)
    if (b[k].width() > b[best].width()) best = k;
  return best;
}

double max_width(const Box6& b) { return b[widest_dimension(b)].width(); }

std::pair<Box6, Box6> bisect(const Box6& b, int dim) {
  Box6 left = b;
  Box6 right = b;
  const double m = b[dim].mid();
  left[dim] = Interval(b[dim].lo(), m);
  right[dim] = Interval(m, b[dim].hi());
  return {left, right};
}

bool contains(const Box6& b, const std::array<double, 6>& y) {
  for (int k = 0; k < 6; ++k)
    if (!b[k].contains(y[k])) return false;
  return true;
}

bool subset_of(const Box6& inner, const Box6& outer) {
  for (int k = 0; k < 6; ++k)
    if (!inner[k].subset_of(outer[k])) return false;
  return true;
}

std::array<double, 6> midpoint(const Box6& b) {
  std::array<double, 6> m{};
  for (int k = 0; k < 6; ++k) m[k] = b[k].mid();
  return m;
}

std::string to_string(const Interval& a) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << a.lo() << "," << a.hi() << "]";
  return os.str();
}

std::string to_string(const Box6& b) {
  std::string out;
  for (int k = 0; k < 6; ++k) out += (k ? " " : "") + to_string(b[k]);
  return out;
}

Interval delta_oct_interval() {
  static const Interval value = [] {
    const Interval inv_sqrt3 = Interval(1.0) / sqrt(Interval(3.0));
    return (-3.0 * pi_interval() + 12.0 * acos(inv_sqrt3)) / sqrt(Interval(8.0));
  }();
  return value;
}

const ConstantEnclosures& constants() {
  static const ConstantEnclosures c = [] {
    ConstantEnclosures out;
    out.sqrt2 = sqrt(Interval(2.0));
    out.two_sqrt2 = 2.0 * out.sqrt2;
    out.two_over_sqrt3 = Interval(2.0) / sqrt(Interval(3.0));
    out.pi = pi_interval();
    out.acos_inv_sqrt3 = acos(Interval(1.0) / sqrt(Interval(3.0)));
    out.delta_oct = delta_oct_interval();
    out.pt = *eval_gamma_I(point_box(OrderedSimplex::regular(2.0)));
    return out;
  }();
  return c;
}

namespace {

// Sign of a - b for plain decimal strings (optional '-', digits, optional '.').
int compare_decimal(const std::string& a, const std::string& b) {
  struct Parts {
    bool negative = false;
    std::string whole, frac;
  };
  auto split = [](std::string s) {
    Parts p;
    if (!s.empty() && s[0] == '-') {
      p.negative = true;
      s.erase(0, 1);
    }
    const auto dot = s.find('.');
    p.whole = s.substr(0, dot);
    if (dot != std::string::npos) p.frac = s.substr(dot + 1);
    p.whole.erase(0, std::min(p.whole.find_first_not_of('0'), p.whole.size()));
    while (!p.frac.empty() && p.frac.back() == '0') p.frac.pop_back();
    return p;
  };
  Parts x = split(a), y = split(b);
  const bool x_zero = x.whole.empty() && x.frac.empty();
  const bool y_zero = y.whole.empty() && y.frac.empty();
  if (x_zero) x.negative = false;
  if (y_zero) y.negative = false;
  if (x.negative != y.negative) return x.negative ? -1 : 1;
  int mag = 0;
  if (x.whole.size() != y.whole.size())
    mag = x.whole.size() < y.whole.size() ? -1 : 1;
  else if (x.whole != y.whole)
    mag = x.whole < y.whole ? -1 : 1;
  else {
    const std::size_t n = std::max(x.frac.size(), y.frac.size());
    x.frac.resize(n, '0');
    y.frac.resize(n, '0');
    if (x.frac != y.frac) mag = x.frac < y.frac ? -1 : 1;
  }
  return x.negative ? -mag : mag;
}

}  // namespace

Interval enclose_decimal(const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(x)) throw std::invalid_argument("not a number: '" + text + "'");
  // glibc prints the exact binary expansion, so comparing digits decides exactness.
  auto normalize = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.find_first_of("eE") != std::string::npos) return std::string();
    if (s.find('.') != std::string::npos) {
      while (!s.empty() && s.back() == '0') s.pop_back();
      if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
  };
  char buf[1200];
  std::snprintf(buf, sizeof buf, "%.1074f", x);
  const std::string lit = normalize(text);
  if (lit.empty()) return {rounding::next_down(x), rounding::next_up(x)};
  const int cmp = compare_decimal(normalize(buf), lit);
  if (cmp == 0) return Interval(x);
  return cmp < 0 ? Interval(x, rounding::next_up(x)) : Interval(rounding::next_down(x), x);
}

Interval enclose_literal(const std::string& text) {
  if (text == "sqrt2") return constants().sqrt2;
  if (text == "2*sqrt2") return constants().two_sqrt2;
  if (text == "2/sqrt3") return constants().two_over_sqrt3;
  return enclose_decimal(text);
}

std::optional<Interval> eval_delta_I(const Box6& y) { return formulas::delta(squares(y)); }

Interval eval_a_vertex_I(const Box6& y, int i) {
  if (i < 0 || i > 3) throw std::out_of_range("eval_a_vertex_I: vertex index must be 0..3");
  return formulas::a_vertex(y, i);
}

std::optional<Interval> eval_eta_I(const Interval& p, const Interval& q, const Interval& r) {
  const Interval h = (p + q + r) * (-p + q + r) * (p - q + r) * (p + q - r);
  if (h.lo() <= 0.0) return std::nullopt;
  return p * q * r / sqrt(h);
}

namespace {

Interval abs_diff(const Interval& a, const Interval& b) {
  const Interval d = a - b;
  if (d.lo() >= 0.0) return d;
  if (d.hi() <= 0.0) return -d;
  return {0.0, std::max(-d.lo(), d.hi())};
}

}  // namespace

// eta^2 = pqr / H(p,q,r) in squared edges. d(eta^2)/dp has the sign of
// p^2 - (q-r)^2, so where that sign is fixed on the box the variable is
// pinned to the appropriate endpoint for each bound.
std::optional<Interval> eval_face_eta_sq_I(const Box6& y, int opposite_vertex) {
  const auto e = face_edges(opposite_vertex);
  const std::array<Interval, 3> v{sqr(y[e[0]]), sqr(y[e[1]]), sqr(y[e[2]])};
  const Interval h = formulas::heron16(v[0], v[1], v[2]);
  if (h.lo() <= 0.0) return std::nullopt;
  std::array<Interval, 3> low = v;
  std::array<Interval, 3> high = v;
  for (int i = 0; i < 3; ++i) {
    const Interval gap = abs_diff(v[(i + 1) % 3], v[(i + 2) % 3]);
    if (v[i].lo() >= gap.hi()) {
      low[i] = Interval(v[i].lo());
      high[i] = Interval(v[i].hi());
    } else if (v[i].hi() <= gap.lo()) {
      low[i] = Interval(v[i].hi());
      high[i] = Interval(v[i].lo());
    }
  }
  auto eval = [](const std::array<Interval, 3>& w) {
    return w[0] * w[1] * w[2] / formulas::heron16(w[0], w[1], w[2]);
  };
  const Interval natural = v[0] * v[1] * v[2] / h;
  const Interval lo = eval(low);
  const Interval hi = eval(high);
  return Interval(std::max(natural.lo(), lo.lo()), std::min(natural.hi(), hi.hi()));
}

std::optional<Interval> eval_face_eta_I(const Box6& y, int opposite_vertex) {
  const auto e = face_edges(opposite_vertex);
  return eval_eta_I(y[e[0]], y[e[1]], y[e[2]]);
}

std::optional<Interval> eval_rad_I(const Box6& y) {
  const auto r2 = eval_rad_sq_I(y);
  if (!r2) return std::nullopt;
  return sqrt(*r2);
}

std::optional<Interval> eval_solid_angle_I(const Box6& y, int i) {
  const Interval d = formulas::delta(squares(y));
  if (d.hi() < 0.0) return std::nullopt;
  return sol_from(sqrt(d), eval_a_vertex_I(y, i));
}

namespace {

template <class T>
std::optional<T> gamma_expr(const Six<T>& y) {
  Six<T> x;
  for (int k = 0; k < 6; ++k) x[k] = sqr(y[k]);
  const T d = formulas::delta(x);
  if (value_of(d).hi() < 0.0) return std::nullopt;
  if constexpr (std::is_same_v<T, Grad>) {
    if (value_of(d).lo() <= 0.0) return std::nullopt;
  }
  const T root = sqrt(d);
  T sol(0.0);
  for (int i = 0; i < 4; ++i) {
    const T a = formulas::a_vertex(y, i);
    if (value_of(a).lo() <= 0.0) return std::nullopt;
    sol += 2.0 * atan(root / (2.0 * a));
  }
  return -delta_oct_interval() * root / 12.0 + sol / 3.0;
}

template <class T>
std::optional<T> vor_expr(const Six<T>& y, int i) {
  Six<T> x;
  for (int k = 0; k < 6; ++k) x[k] = sqr(y[k]);
  const T d = formulas::delta(x);
  if (value_of(d).lo() <= 0.0) return std::nullopt;
  const T root = sqrt(d);
  T vol(0.0);
  for (int k = 0; k < 4; ++k) {
    if (k == i) continue;
    const auto f = formulas::face_squares(x, k);
    const T t = formulas::heron16(f[0], f[1], f[2]);
    if (value_of(t).lo() <= 0.0) return std::nullopt;
    vol += formulas::circum_weight_numerator(x, k) * formulas::rogers_edge_sum(x, i, k) / t;
  }
  vol /= 12.0 * root;
  const T a = formulas::a_vertex(y, i);
  if (value_of(a).lo() <= 0.0) return std::nullopt;
  const T sol = 2.0 * atan(root / (2.0 * a));
  return 4.0 * (-delta_oct_interval() * vol + sol / 3.0);
}

template <class T>
std::optional<T> rad_sq_expr(const Six<T>& y) {
  Six<T> x;
  for (int k = 0; k < 6; ++k) x[k] = sqr(y[k]);
  const T d = formulas::delta(x);
  if (value_of(d).lo() <= 0.0) return std::nullopt;
  return formulas::circum_numerator(x) / (4.0 * d);
}

// Natural extension intersected with mean-value forms. Where a partial
// derivative has constant sign on the box, that variable is pinned to the
// endpoint that maximizes (for the upper bound) or minimizes (for the lower
// bound) the function before the mean-value form is applied.
template <class F>
std::optional<Interval> refined(const F& f, const Box6& b, std::array<double, 6>* sensitivity) {
  if (sensitivity) sensitivity->fill(0.0);
  const auto natural = f(Six<Interval>(b));
  if (!natural || max_width(b) == 0.0) return natural;
  Six<Grad> yg;
  for (int k = 0; k < 6; ++k) yg[k] = Grad::variable(b[k], k);
  std::optional<Grad> g;
  try {
    g = f(yg);
  } catch (const std::domain_error&) {
    g.reset();
  }
  if (!g) return natural;
  if (sensitivity)
    for (int k = 0; k < 6; ++k) (*sensitivity)[k] = std::max(std::fabs(g->d[k].lo()), std::fabs(g->d[k].hi())) * b[k].width();
  Box6 up = b;
  Box6 down = b;
  for (int k = 0; k < 6; ++k) {
    if (g->d[k].lo() >= 0.0) {
      up[k] = Interval(b[k].hi());
      down[k] = Interval(b[k].lo());
    } else if (g->d[k].hi() <= 0.0) {
      up[k] = Interval(b[k].lo());
      down[k] = Interval(b[k].hi());
    }
  }
  auto centered = [&](const Box6& s) -> std::optional<Interval> {
    Six<Interval> m;
    for (int k = 0; k < 6; ++k) m[k] = Interval(s[k].mid());
    const auto fm = f(m);
    if (!fm) return std::nullopt;
    Interval r = *fm;
    for (int k = 0; k < 6; ++k)
      if (s[k].width() > 0.0) r += g->d[k] * (s[k] - m[k]);
    return r;
  };
  double lo = natural->lo();
  double hi = natural->hi();
  if (const auto c = centered(up)) hi = std::min(hi, c->hi());
  if (const auto c = centered(down)) lo = std::max(lo, c->lo());
  if (lo > hi) return natural;
  return Interval(lo, hi);
}

}  // namespace

std::optional<Interval> eval_gamma_I(const Box6& y, std::array<double, 6>* sensitivity) {
  require_unit_separation(y, "eval_gamma_I");
  return refined([](const auto& v) { return gamma_expr(v); }, y, sensitivity);
}

std::optional<Interval> eval_rad_sq_I(const Box6& y) {
  return refined([](const auto& v) { return rad_sq_expr(v); }, y, nullptr);
}

std::optional<Interval> eval_vor_I(const Box6& y, int i, std::array<double, 6>* sensitivity) {
  if (i < 0 || i > 3) throw std::out_of_range("eval_vor_I: vertex index must be 0..3");
  return refined([i](const auto& v) { return vor_expr(v, i); }, y, sensitivity);
}

// delta(a,b,c) = 4 g(X) / (a (a+b) (b+c)) with g(X) = atan(X)/X and
// X^2 = (b-a)(c-b) / ((a+b)(b+c)); this form stays finite on zero-volume
// boundaries where the ball-fraction ratio is 0/0.
std::optional<Interval> eval_rogers_density_I(const Interval& a, const Interval& b, const Interval& c) {
  if (a.lo() <= 0.0) return std::nullopt;
  const Interval num = (b - a) * (c - b);
  if (num.hi() < 0.0) return std::nullopt;
  const Interval ab = a + b;
  const Interval bc = b + c;
  const Interval x = sqrt(num / (ab * bc));
  return 4.0 * atan_over_x(x) / (a * ab * bc);
}

std::optional<Interval> eval_aux_I(AuxFunction which, const Box6& b, int index) {
  switch (which) {
    case AuxFunction::Delta:
      return eval_delta_I(b);
    case AuxFunction::EtaFace:
      return eval_face_eta_I(b, index);
    case AuxFunction::Rad:
      return eval_rad_I(b);
    case AuxFunction::RogersDensity:
      return eval_rogers_density_I(b[0], b[1], b[2]);
    case AuxFunction::AVertex:
      return eval_a_vertex_I(b, index);
  }
  return std::nullopt;
}

}  // namespace octbound
