#pragma once

#include <set>
#include <string>
#include <vector>

#include "knotcalc/knot_record.hpp"
#include "knotcalc/slope.hpp"

namespace knotcalc {

enum class Bundle { trivial, meridional };

/// Dimension of the framed instanton homology of p/q-surgery along the
/// given bundle.  Needs nu_sharp and r0.  For p != 0 (q > 0) this is the
/// singleton q*r0 + |p - q*nu_sharp| for either bundle.  For p = 0 with
/// nu_sharp != 0 it is the singleton r0 + |nu_sharp|.  For p = 0 with
/// nu_sharp = 0 the answer depends on the bundle and on the shape; when the
/// shape is unknown the two candidates {r0, r0 + 2} are returned.
/// The zero slope with nu_sharp = 0 and the infinity slope are the only
/// multi-valued cases; infinity surgery returns {1}.
std::set<int> dim_surgery(const KnotRecord& rec, const Slope& s,
                          Bundle bundle = Bundle::trivial);

struct DimRow {
  Slope slope;
  std::set<int> dims;
};

std::vector<DimRow> dim_table(const KnotRecord& rec,
                              const std::vector<Slope>& slopes,
                              Bundle bundle);

/// One solution of q*r + |p - q*nu| = D with the structural constraints on
/// (nu, r) and gcd(p, q) = 1, p != 0.
struct FeasibleSurgery {
  long long p;
  long long q;
  int nu;
  int r0;

  friend bool operator==(const FeasibleSurgery&, const FeasibleSurgery&) = default;
  friend auto operator<=>(const FeasibleSurgery&, const FeasibleSurgery&) = default;
};

struct SlopeBoundResult {
  /// Theorem bound on the denominator: floor(D / 3) once the unknot,
  /// the trefoils and the figure eight are excluded (r0 >= 3).
  int q_max;
  /// Solutions attaining q = D/3 exactly.  Nonempty only for D = 3,
  /// where they are p/q in {+-1, +-3} with (nu, r0) = (p, 3).
  std::vector<FeasibleSurgery> equality_cases;
  /// Exhaustive solution list.  With exclude_exceptional = false the r0 = 0
  /// stratum admits arbitrarily large coprime denominators, so the
  /// enumeration is capped at q <= D.
  std::vector<FeasibleSurgery> feasible;
};

/// Every way a knot can produce total dimension D from a p/q-surgery,
/// assuming r0 >= 3 when exclude_exceptional is true and r0 >= 0 otherwise.
SlopeBoundResult slope_bound(int D, bool exclude_exceptional = true);

enum class KnownKnot {
  none,
  unknot,
  right_trefoil,
  left_trefoil,
  figure_eight,
  t25,         // (2,5) torus knot
  t25_mirror,
};

struct Classification {
  KnownKnot knot = KnownKnot::none;
  /// Definite consequences short of a full identification.
  std::vector<std::string> constraints;
  /// True when the only available statement is the conjectural r0 = 3 list.
  bool conjectural = false;
};

std::string to_string(KnownKnot k);

/// What the pair (nu_sharp, r0) forces about the knot.  Identification is
/// definite for r0 <= 2 and for |nu_sharp| = r0 = 3; the remaining r0 = 3
/// cases are reported as conjectural.
Classification classify_small(int nu, int r0);

}  // namespace knotcalc
