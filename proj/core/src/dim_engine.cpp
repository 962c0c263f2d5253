#include "knotcalc/dim_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace knotcalc {

std::set<int> dim_surgery(const KnotRecord& rec, const Slope& s, Bundle bundle) {
  if (!rec.nu_sharp || !rec.r0)
    throw std::invalid_argument("dim_surgery needs nu_sharp and r0");
  auto bad = structural_violations(rec);
  if (!bad.empty()) throw std::invalid_argument("inconsistent record: " + bad.front());
  if (s.is_infinity()) return {1};
  const long long nu = *rec.nu_sharp;
  const long long r0 = *rec.r0;
  if (s.p != 0) {
    long long d = s.q * r0 + std::llabs(s.p - s.q * nu);
    return {int(d)};
  }
  // zero-surgery
  if (nu != 0) return {int(r0 + std::llabs(nu))};
  if (!rec.shape) return {int(r0), int(r0 + 2)};
  const bool high = (*rec.shape == Shape::W) == (bundle == Bundle::trivial);
  return {int(high ? r0 + 2 : r0)};
}

std::vector<DimRow> dim_table(const KnotRecord& rec,
                              const std::vector<Slope>& slopes, Bundle bundle) {
  std::vector<DimRow> out;
  out.reserve(slopes.size());
  for (const auto& s : slopes) out.push_back({s, dim_surgery(rec, s, bundle)});
  return out;
}

SlopeBoundResult slope_bound(int D, bool exclude_exceptional) {
  if (D < 1) throw std::invalid_argument("slope_bound needs D >= 1");
  SlopeBoundResult res;
  res.q_max = D / 3;
  const int r_min = exclude_exceptional ? 3 : 0;
  std::set<FeasibleSurgery> rows;
  for (long long q = 1; q <= D; ++q) {
    for (int r = r_min; (long long)q * r <= D; ++r) {
      for (int nu = -r; nu <= r; ++nu) {
        if (nu != 0 && nu % 2 == 0) continue;
        if ((r - nu) % 2 != 0) continue;
        long long rem = D - q * r;
        for (long long p : {q * nu + rem, q * nu - rem}) {
          if (p == 0) continue;
          if (std::gcd(std::llabs(p), q) != 1) continue;
          rows.insert({p, q, nu, r});
        }
      }
    }
  }
  res.feasible.assign(rows.begin(), rows.end());
  // Bound-attaining cases: 3q = D forces r0 = 3 and p = q*nu, which is only
  // a reduced slope for q = 1.
  for (const auto& f : res.feasible)
    if (f.r0 >= 3 && 3 * f.q == D && f.p == f.q * f.nu)
      res.equality_cases.push_back(f);
  return res;
}

std::string to_string(KnownKnot k) {
  switch (k) {
    case KnownKnot::none: return "none";
    case KnownKnot::unknot: return "unknot";
    case KnownKnot::right_trefoil: return "right-handed trefoil";
    case KnownKnot::left_trefoil: return "left-handed trefoil";
    case KnownKnot::figure_eight: return "figure eight";
    case KnownKnot::t25: return "(2,5) torus knot";
    case KnownKnot::t25_mirror: return "mirror (2,5) torus knot";
  }
  return "none";
}

Classification classify_small(int nu, int r0) {
  if ((nu != 0 && nu % 2 == 0) || r0 < std::abs(nu) || (r0 - nu) % 2 != 0)
    throw std::invalid_argument("classify_small: invalid (nu_sharp, r0) pair");
  Classification c;
  if (r0 == 0) {
    c.knot = KnownKnot::unknot;
    return c;
  }
  if (r0 == 1) {
    c.knot = nu == 1 ? KnownKnot::right_trefoil : KnownKnot::left_trefoil;
    c.constraints.push_back("Seifert genus 1, fibered");
    return c;
  }
  if (r0 == 2) {
    c.knot = KnownKnot::figure_eight;
    c.constraints.push_back("Seifert genus 1, fibered");
    return c;
  }
  // r0 - nu = 2 with nu <= 1 forces genus 1; by mirror symmetry so does
  // r0 - |nu| = 2 with |nu| <= 1.
  if (r0 - std::abs(nu) == 2 && std::abs(nu) <= 1)
    c.constraints.push_back("Seifert genus 1");
  if (r0 == 3 && std::abs(nu) == 3) {
    c.knot = nu > 0 ? KnownKnot::t25 : KnownKnot::t25_mirror;
    c.constraints.push_back("genus-2 instanton L-space knot up to mirroring");
    return c;
  }
  if (r0 == 3 && std::abs(nu) == 1) {
    c.constraints.push_back(
        "Alexander polynomial 2t - 3 + 2t^-1 or 1");
  }
  if (r0 == 3) {
    c.conjectural = true;
    c.constraints.push_back(
        "conjecturally the (2,5) torus knot, 5_2, or one of their mirrors");
  }
  return c;
}

}  // namespace knotcalc
