#include "octbound/multipoly.hpp"

#include <sstream>

namespace octbound {

int degree(const MultiPoly::Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

MultiPoly::MultiPoly(const Interval& c) { add_term({}, c); }

MultiPoly MultiPoly::variable(int k) {
  MultiPoly p;
  Exponents e{};
  e.at(k) = 1;
  p.add_term(e, Interval(1.0));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Interval& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!(c.lo() == 0.0 && c.hi() == 0.0)) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.lo() == 0.0 && it->second.hi() == 0.0) terms_.erase(it);
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, octbound::degree(e));
  return d;
}

Interval MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Interval(0.0) : it->second;
}

MultiPoly MultiPoly::without_constant() const {
  MultiPoly p = *this;
  p.terms_.erase(Exponents{});
  return p;
}

Interval MultiPoly::eval(const std::array<Interval, 6>& f) const {
  Interval sum(0.0);
  for (const auto& [e, c] : terms_) {
    Interval m = c;
    for (int k = 0; k < 6; ++k)
      for (int j = 0; j < e[k]; ++j) m *= f[k];
    sum += m;
  }
  return sum;
}

double MultiPoly::eval(const std::array<double, 6>& f) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c.mid();
    for (int k = 0; k < 6; ++k)
      for (int j = 0; j < e[k]; ++j) m *= f[k];
    sum += m;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.mid();
    for (int k = 0; k < 6; ++k)
      if (e[k]) os << "*f" << k + 1 << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  return first ? "0" : os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e{};
      for (int k = 0; k < 6; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly sqr(const MultiPoly& p) { return p * p; }

}  // namespace octbound
