#include "knotcalc/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knotcalc/dim_engine.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/slope.hpp"

namespace knotcalc {

int euler_char(const GradedDim& g) { return g.d[0] - g.d[1] + g.d[2] - g.d[3]; }

std::string to_string(const GradedDim& g) {
  std::ostringstream os;
  os << "(" << g.d[0] << "," << g.d[1] << "," << g.d[2] << "," << g.d[3] << ")";
  return os.str();
}

static int mod4(int v) { return ((v % 4) + 4) % 4; }

int cobordism_degree(int chi, int sigma, int b1_in, int b1_out, int nu_sq) {
  if ((chi + sigma) % 2 != 0)
    throw std::invalid_argument("cobordism_degree: chi + sigma must be even");
  if ((b1_out - b1_in) % 2 != 0)
    throw std::invalid_argument("cobordism_degree: b1 difference must be even");
  int deg = -3 * (chi + sigma) / 2 + (b1_out - b1_in) / 2 + 2 * nu_sq;
  return mod4(deg);
}

std::optional<TriangleRanks> triangle_feasible(const TriangleSpec& spec,
                                               const TriangleConstraints& con) {
  const auto& A = spec.a.d;
  const auto& B = spec.b.d;
  const auto& C = spec.c.d;
  std::array<int, 4> ab{}, bc{}, ca{};
  // choose the ranks of A -> B per source grading; everything else follows
  // from exactness (dimension = rank in + rank out at each vertex)
  std::array<int, 4> cap{};
  for (int g = 0; g < 4; ++g)
    cap[g] = std::min(A[g], B[mod4(g + spec.deg_ab)]);
  for (ab[0] = 0; ab[0] <= cap[0]; ++ab[0])
    for (ab[1] = 0; ab[1] <= cap[1]; ++ab[1])
      for (ab[2] = 0; ab[2] <= cap[2]; ++ab[2])
        for (ab[3] = 0; ab[3] <= cap[3]; ++ab[3]) {
          bool ok = true;
          for (int g = 0; g < 4 && ok; ++g) {
            bc[g] = B[g] - ab[mod4(g - spec.deg_ab)];
            if (bc[g] < 0) ok = false;
          }
          for (int g = 0; g < 4 && ok; ++g) {
            ca[g] = C[g] - bc[mod4(g - spec.deg_bc)];
            if (ca[g] < 0) ok = false;
          }
          for (int g = 0; g < 4 && ok; ++g)
            if (A[g] != ca[mod4(g - spec.deg_ca)] + ab[g]) ok = false;
          if (!ok) continue;
          auto total = [](const std::array<int, 4>& r) {
            return r[0] + r[1] + r[2] + r[3];
          };
          if (con.rank_ab && total(ab) != *con.rank_ab) continue;
          if (con.rank_bc && total(bc) != *con.rank_bc) continue;
          if (con.rank_ca && total(ca) != *con.rank_ca) continue;
          return TriangleRanks{ab, bc, ca};
        }
  return std::nullopt;
}

namespace {

std::vector<GradedDim> euler_zero_shapes(int total) {
  std::vector<GradedDim> out;
  for (int d0 = 0; d0 <= total; ++d0)
    for (int d1 = 0; d0 + d1 <= total; ++d1)
      for (int d2 = 0; d0 + d1 + d2 <= total; ++d2) {
        int d3 = total - d0 - d1 - d2;
        GradedDim g{{d0, d1, d2, d3}};
        if (euler_char(g) == 0) out.push_back(g);
      }
  return out;
}

GradedDim support(std::initializer_list<int> gradings) {
  GradedDim g;
  for (int x : gradings) ++g.d[((x % 4) + 4) % 4];
  return g;
}

}  // namespace

std::vector<Section9Solution> solve_section9(int dim_zero_total) {
  if (dim_zero_total < 0)
    throw std::invalid_argument("solve_section9: nonnegative dimension required");
  const GradedDim sphere{{1, 0, 0, 0}};
  std::vector<Section9Solution> out;
  auto zeros = euler_zero_shapes(dim_zero_total);
  for (int k = 0; k < 4; ++k) {
    GradedDim minus = support({0, k - 1, k});
    for (int m = 0; m < 4; ++m) {
      GradedDim plus = support({0, m - 1, m});
      for (const auto& zero : zeros) {
        // surgery triangle through the -1-surgery: the map out of the
        // three-sphere has rank one (degree 2) and the map back vanishes
        TriangleConstraints c1;
        c1.rank_ab = 1;
        c1.rank_ca = 0;
        if (!triangle_feasible({sphere, minus, zero, 2, 3, 2}, c1)) continue;
        // surgery triangle through the +1-surgery: the map out of the
        // three-sphere vanishes and the map back has rank one (degree 2)
        TriangleConstraints c2;
        c2.rank_ab = 0;
        c2.rank_ca = 1;
        if (!triangle_feasible({sphere, zero, plus, 3, 2, 2}, c2)) continue;
        out.push_back({k, m, minus, plus, zero});
      }
    }
  }
  return out;
}

int froyshov_gap(int dim_i, int dim_ihat) {
  if (dim_i < dim_ihat)
    throw std::invalid_argument("froyshov_gap: dim I >= dim I-hat required");
  if ((dim_i - dim_ihat) % 2 != 0)
    throw std::invalid_argument("froyshov_gap: dimension gap must be even");
  return (dim_i - dim_ihat) / 2;
}

int fukaya_odd_rank(int dim_pm1) {
  if (dim_pm1 < 1 || dim_pm1 % 2 == 0)
    throw std::invalid_argument(
        "fukaya_odd_rank: dimension of a +/-1-surgery theory is odd and >= 1");
  return (dim_pm1 - 1) / 2;
}

bool fukaya_zero_surgery_match(int dim_isharp_zero_mu, int dim_i_zero_mu) {
  return dim_isharp_zero_mu == dim_i_zero_mu;
}

Section9Report section9_contradiction(int dim_zero_total,
                                      std::optional<long long> forced_a) {
  Section9Report rep;
  auto step = [&](const std::string& s) { rep.steps.push_back(s); };
  if (dim_zero_total == 4) {
    step("zero-surgery dimension 4 is the figure-eight branch: a fibered "
         "genus-one knot with nu_sharp = 0, r0 = 2 and this zero-surgery "
         "profile is the figure eight");
    rep.contradiction = false;
    return rep;
  }
  auto sols = solve_section9(dim_zero_total);
  if (sols.size() != 1) {
    step("grading system is not uniquely solvable for zero-surgery dimension " +
         std::to_string(dim_zero_total) + "; no contradiction chain available");
    return rep;
  }
  const auto& sol = sols.front();
  step("unique grading solution: k = " + std::to_string(sol.k) + ", m = " +
       std::to_string(sol.m) + ", zero-surgery supported in " +
       to_string(sol.zero));
  // the -1-surgery has dim I# = 3, dim I#-hat = ... the Froyshov gap of the
  // irreducible theory: dim I = 4, dim I-hat = 2, so |h| = 1 and the
  // irreducible homology sits in the four odd Z/8 gradings
  int gap = froyshov_gap(4, 2);
  step("irreducible -1-surgery theory: dim 4 vs reduced dim 2 gives "
       "Froyshov gap " + std::to_string(gap) +
       "; the homology sits in odd gradings, so its Euler characteristic is -4");
  long long a = forced_a ? *forced_a : 2;
  if (!forced_a)
    step("Casson invariant: -Delta''(1) = -4 forces Delta''(1) = 4, i.e. "
         "a = 2 in the genus-one form a*t + (1-2a) + a/t");
  LaurentPoly delta = genus1_alexander(a);
  step("Alexander polynomial " + to_string(delta));
  LaurentPoly cabled = cable_substitute(delta);
  long long chi = casson_chi(cabled);
  rep.alexander_a = a;
  rep.lower_bound = chi < 0 ? -chi : chi;
  step("(2,1)-cable substitute t -> t^2: " + to_string(cabled) +
       " with Casson chi " + std::to_string(chi) +
       "; the zero-surgery theory of the cable has dimension >= " +
       std::to_string(rep.lower_bound));
  // the -1/4-surgery on the hypothetical knot computes the cable's
  // -1-surgery; its dimension pins the zero-surgery dimensions of the cable
  Slope s = cable_slope(-1, 2, +1);
  KnotRecord hyp;
  hyp.name = "hypothetical";
  hyp.nu_sharp = 0;
  hyp.r0 = 2;
  int dim_quarter = *dim_surgery(hyp, s, Bundle::trivial).begin();
  rep.feasible_dims = {dim_quarter - 1, dim_quarter + 1};
  step("companion -1/4-surgery (cable slope of (-1,2)-cabling with eps = +1) "
       "has dimension " + std::to_string(dim_quarter) +
       ", so the cable's zero-surgery dimension lies in {" +
       std::to_string(rep.feasible_dims[0]) + ", " +
       std::to_string(rep.feasible_dims[1]) + "}");
  step("the two mu-twisted zero-surgery theories agree, transporting the "
       "Casson bound to the same dimension");
  int max_feasible = *std::max_element(rep.feasible_dims.begin(),
                                       rep.feasible_dims.end());
  rep.contradiction = rep.lower_bound > max_feasible;
  if (rep.contradiction)
    step("contradiction: lower bound " + std::to_string(rep.lower_bound) +
         " exceeds every feasible dimension");
  else
    step("no contradiction: lower bound " + std::to_string(rep.lower_bound) +
         " is consistent with the feasible dimensions");
  return rep;
}

}  // namespace knotcalc
