#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace knotcalc {

/// Dimension vector of a Z/4-graded vector space.
struct GradedDim {
  std::array<int, 4> d{};

  int total() const { return d[0] + d[1] + d[2] + d[3]; }

  friend bool operator==(const GradedDim&, const GradedDim&) = default;
  friend auto operator<=>(const GradedDim&, const GradedDim&) = default;
};

/// Alternating sum d0 - d1 + d2 - d3.
int euler_char(const GradedDim& g);

std::string to_string(const GradedDim& g);

/// Mod-4 degree of the cobordism map:
///   -(3/2)(chi + sigma) + (1/2)(b1_out - b1_in) + 2*nu_sq   (mod 4).
/// Requires chi + sigma and b1_out - b1_in even.  nu_sq is the
/// self-intersection contribution; adding a blow-up (chi += 1, sigma -= 1)
/// leaves the degree unchanged.
int cobordism_degree(int chi, int sigma, int b1_in, int b1_out, int nu_sq);

/// Exact triangle A -> B -> C -> A of Z/4-graded spaces with the three map
/// degrees.  A map of degree dg sends grading g to g + dg.
struct TriangleSpec {
  GradedDim a, b, c;
  int deg_ab, deg_bc, deg_ca;
};

/// Per-grading ranks of the three maps, indexed by source grading.
struct TriangleRanks {
  std::array<int, 4> ab{}, bc{}, ca{};
};

/// Extra constraints on a feasibility search: force a map's total rank.
struct TriangleConstraints {
  std::optional<int> rank_ab, rank_bc, rank_ca;
};

/// A rank assignment making the triangle exact (dimension at each vertex
/// and grading equals incoming rank plus outgoing rank), if one exists.
std::optional<TriangleRanks> triangle_feasible(
    const TriangleSpec& spec, const TriangleConstraints& con = {});

/// A consistent grading assignment for the surgery triad of a genus-one
/// fibered knot: -1-surgery supported in gradings {0, k-1, k}, +1-surgery
/// in {0, m-1, m}, zero-surgery of the given total dimension with zero
/// Euler characteristic, linked to the three-sphere by the two exact
/// triangles with map degrees (2, 3, 2) and (3, 2, 2).
struct Section9Solution {
  int k = 0;
  int m = 0;
  GradedDim minus_one, plus_one, zero;

  friend bool operator==(const Section9Solution&, const Section9Solution&) = default;
};

/// All solutions of the grading constraint system.  With the default total
/// dimension 2 for the zero-surgery the solution is unique: k = 3, m = 2,
/// zero-surgery supported in gradings 2 and 3.
std::vector<Section9Solution> solve_section9(int dim_zero_total = 2);

/// |h| = (dim I - dim I-hat) / 2.  Requires dim_i >= dim_ihat with even
/// difference.
int froyshov_gap(int dim_i, int dim_ihat);

/// dim of the irreducible instanton homology of a +/-1-surgery is 1 + 2a;
/// returns a, rejecting even or nonpositive input.
int fukaya_odd_rank(int dim_pm1);

/// The two mu-twisted zero-surgery theories have equal dimension.
bool fukaya_zero_surgery_match(int dim_isharp_zero_mu, int dim_i_zero_mu);

struct Section9Report {
  bool contradiction = false;
  long long alexander_a = 0;     // coefficient in a*t + (1-2a) + a/t
  long long lower_bound = 0;     // |Casson chi| of the cabled knot
  std::vector<int> feasible_dims;
  std::vector<std::string> steps;
};

/// Constraint chase for a hypothetical nu = 0, r0 = 2 knot other than the
/// figure eight.  dim_zero_total is the untwisted zero-surgery dimension
/// (2 in the contradiction branch, 4 in the figure-eight branch);
/// forced_a overrides the Alexander coefficient derived from the gradings.
Section9Report section9_contradiction(int dim_zero_total = 2,
                                      std::optional<long long> forced_a = {});

}  // namespace knotcalc
