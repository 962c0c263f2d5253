#include "knotcalc/slope.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace knotcalc {

Slope normalize(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
  if (q == 0) return {1, 0};
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(std::llabs(p), q);
  return {p / g, q / g};
}

long long distance(const Slope& a, const Slope& b) {
  return std::llabs(a.p * b.q - b.p * a.q);
}

static long long mod_inverse(long long a, long long m) {
  // extended Euclid; m >= 2, gcd(a, m) = 1
  long long r0 = m, r1 = ((a % m) + m) % m;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return ((t0 % m) + m) % m;
}

std::pair<Slope, Slope> farey_parents(const Slope& s) {
  if (s.q < 2) throw std::invalid_argument("farey_parents needs q >= 2");
  // Solve b*p - a*q = 1 with 1 <= b <= q-1; the other parent is the
  // complement (p-a)/(q-b).
  long long b = mod_inverse(s.p, s.q);
  long long a = (b * s.p - 1) / s.q;
  Slope left{a, b};
  Slope right{s.p - a, s.q - b};
  if (right.q < left.q || (right.q == left.q && right.p < left.p))
    std::swap(left, right);
  return {left, right};
}

Slope cable_slope(long long p, long long q, int eps) {
  if (q < 2) throw std::invalid_argument("cable_slope needs q >= 2");
  if (std::gcd(std::llabs(p), q) != 1)
    throw std::invalid_argument("cable_slope needs gcd(p, q) = 1");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("cable_slope needs eps = +1 or -1");
  return normalize(p * q + eps, q * q);
}

std::string to_string(const Slope& s) {
  if (s.is_infinity()) return "inf";
  if (s.is_integer()) return std::to_string(s.p);
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "infinity") return {1, 0};
  auto pos = text.find('/');
  try {
    if (pos == std::string::npos) return normalize(std::stoll(text), 1);
    return normalize(std::stoll(text.substr(0, pos)),
                     std::stoll(text.substr(pos + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse slope '" + text + "'");
  }
}

}  // namespace knotcalc
