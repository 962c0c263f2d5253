#include "knotcalc/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotcalc {

long long LaurentPoly::coeff(int e) const {
  auto it = c.find(e);
  return it == c.end() ? 0 : it->second;
}

void LaurentPoly::set(int e, long long v) {
  if (v == 0)
    c.erase(e);
  else
    c[e] = v;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, v] : c)
    if (coeff(-e) != v) return false;
  return true;
}

long long LaurentPoly::eval_at_one() const {
  long long s = 0;
  for (const auto& [e, v] : c) s += v;
  return s;
}

LaurentPoly laurent(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p;
  for (const auto& [e, v] : terms) p.set(e, p.coeff(e) + v);
  return p;
}

long long second_derivative_at_one(const LaurentPoly& p) {
  long long s = 0;
  for (const auto& [e, v] : p.c) s += v * (long long)e * (e - 1);
  return s;
}

LaurentPoly cable_substitute(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, v] : p.c) out.set(2 * e, v);
  return out;
}

long long casson_chi(const LaurentPoly& delta) {
  if (!delta.is_symmetric())
    throw std::domain_error("casson_chi needs a symmetric polynomial");
  return -second_derivative_at_one(delta);
}

LaurentPoly genus1_alexander(long long a) {
  return laurent({{1, a}, {0, 1 - 2 * a}, {-1, a}});
}

std::string to_string(const LaurentPoly& p) {
  if (p.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    auto [e, v] = *it;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    long long av = v < 0 ? -v : v;
    if (av != 1 || e == 0) os << av;
    if (e != 0) {
      if (av != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace knotcalc
