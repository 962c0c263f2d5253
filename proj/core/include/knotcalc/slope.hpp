#pragma once

#include <string>
#include <utility>

namespace knotcalc {

/// A reduced surgery slope p/q with q >= 0.  q == 0 only for the infinity
/// slope, which is normalized to 1/0.  Use normalize() to construct from
/// arbitrary integer pairs.
struct Slope {
  long long p = 0;
  long long q = 1;

  bool is_infinity() const { return q == 0; }
  bool is_integer() const { return q == 1; }

  friend bool operator==(const Slope&, const Slope&) = default;
};

/// Reduce (p, q) to lowest terms with q >= 0; sign carried by p.
/// (p, 0) maps to the infinity slope 1/0 for any p != 0.  Rejects (0, 0).
Slope normalize(long long p, long long q);

/// Farey distance |p1*q2 - p2*q1|.  Both slopes must be reduced.
long long distance(const Slope& a, const Slope& b);

/// The unique pair (a/b, c/d) with a+c = p, b+d = q and all pairwise
/// distances among {a/b, p/q, c/d} equal to one.  Requires q >= 2.
/// Ordered by denominator ascending, then numerator ascending.
std::pair<Slope, Slope> farey_parents(const Slope& s);

/// Slope on the companion knot K such that (p*q+eps)-surgery on the
/// (p, q)-cable of K equals that surgery on K: returns (p*q+eps)/q^2.
/// Requires gcd(p, q) = 1, q >= 2, eps = +1 or -1.
Slope cable_slope(long long p, long long q, int eps);

std::string to_string(const Slope& s);

/// Parses "p/q", a bare integer "n", or "inf".
Slope parse_slope(const std::string& text);

}  // namespace knotcalc
