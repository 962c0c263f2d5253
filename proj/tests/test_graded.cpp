#include <doctest.h>

#include <stdexcept>

#include <random>

#include "knotcalc/graded.hpp"
#include "knotcalc/laurent.hpp"

using namespace knotcalc;

TEST_CASE("euler characteristic") {
  CHECK(euler_char({{1, 0, 1, 1}}) == 1);
  CHECK(euler_char({{0, 0, 1, 1}}) == 0);
  CHECK(euler_char({{2, 1, 0, 3}}) == -2);
}

TEST_CASE("cobordism degree formula") {
  // blow-up invariance: chi -> chi + 1, sigma -> sigma - 1
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 2000; ++t) {
    int chi = d(rng), sigma = d(rng);
    if ((chi + sigma) % 2 != 0) ++sigma;
    int b1i = std::abs(d(rng)), b1o = std::abs(d(rng));
    if ((b1o - b1i) % 2 != 0) ++b1o;
    int nusq = d(rng);
    int base = cobordism_degree(chi, sigma, b1i, b1o, nusq);
    CHECK(cobordism_degree(chi + 1, sigma - 1, b1i, b1o, nusq) == base);
    CHECK(base >= 0);
    CHECK(base < 4);
  }
  CHECK_THROWS_AS(cobordism_degree(1, 0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(cobordism_degree(0, 0, 0, 1, 0), std::invalid_argument);
  // degree shifts additively with the square of the bundle class
  CHECK(cobordism_degree(0, 0, 0, 0, 1) ==
        (cobordism_degree(0, 0, 0, 0, 0) + 2) % 4);
}

namespace {

// Brute force over all three rank vectors independently, checking the six
// exactness equations directly.
bool triangle_oracle(const TriangleSpec& s, const TriangleConstraints& con) {
  auto m4 = [](int v) { return ((v % 4) + 4) % 4; };
  std::array<int, 4> ab{}, bc{}, ca{};
  for (ab[0] = 0; ab[0] <= s.a.d[0]; ++ab[0])
  for (ab[1] = 0; ab[1] <= s.a.d[1]; ++ab[1])
  for (ab[2] = 0; ab[2] <= s.a.d[2]; ++ab[2])
  for (ab[3] = 0; ab[3] <= s.a.d[3]; ++ab[3])
  for (bc[0] = 0; bc[0] <= s.b.d[0]; ++bc[0])
  for (bc[1] = 0; bc[1] <= s.b.d[1]; ++bc[1])
  for (bc[2] = 0; bc[2] <= s.b.d[2]; ++bc[2])
  for (bc[3] = 0; bc[3] <= s.b.d[3]; ++bc[3]) {
    bool mid = true;
    for (int g = 0; g < 4 && mid; ++g)
      if (s.b.d[g] != ab[m4(g - s.deg_ab)] + bc[g]) mid = false;
    if (!mid) continue;
    for (ca[0] = 0; ca[0] <= s.c.d[0]; ++ca[0])
    for (ca[1] = 0; ca[1] <= s.c.d[1]; ++ca[1])
    for (ca[2] = 0; ca[2] <= s.c.d[2]; ++ca[2])
    for (ca[3] = 0; ca[3] <= s.c.d[3]; ++ca[3]) {
      bool ok = true;
      for (int g = 0; g < 4 && ok; ++g)
        if (s.c.d[g] != bc[m4(g - s.deg_bc)] + ca[g]) ok = false;
      for (int g = 0; g < 4 && ok; ++g)
        if (s.a.d[g] != ca[m4(g - s.deg_ca)] + ab[g]) ok = false;
      if (!ok) continue;
      auto total = [](const std::array<int, 4>& r) {
        return r[0] + r[1] + r[2] + r[3];
      };
      if (con.rank_ab && total(ab) != *con.rank_ab) continue;
      if (con.rank_bc && total(bc) != *con.rank_bc) continue;
      if (con.rank_ca && total(ca) != *con.rank_ca) continue;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("triangle feasibility matches the exhaustive oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(0, 4), deg(0, 3), coin(0, 1);
  for (int t = 0; t < 250; ++t) {
    TriangleSpec s;
    for (int g = 0; g < 4; ++g) {
      s.a.d[g] = dim(rng);
      s.b.d[g] = dim(rng);
      s.c.d[g] = dim(rng);
    }
    s.deg_ab = deg(rng);
    s.deg_bc = deg(rng);
    s.deg_ca = deg(rng);
    TriangleConstraints con;
    if (coin(rng)) con.rank_ab = dim(rng);
    auto got = triangle_feasible(s, con);
    CHECK(got.has_value() == triangle_oracle(s, con));
    if (got) {
      // the witness actually satisfies exactness
      auto m4 = [](int v) { return ((v % 4) + 4) % 4; };
      for (int g = 0; g < 4; ++g) {
        CHECK(s.b.d[g] == got->ab[m4(g - s.deg_ab)] + got->bc[g]);
        CHECK(s.c.d[g] == got->bc[m4(g - s.deg_bc)] + got->ca[g]);
        CHECK(s.a.d[g] == got->ca[m4(g - s.deg_ca)] + got->ab[g]);
      }
    }
  }
}

TEST_CASE("grading constraint system has the unique documented solution") {
  auto sols = solve_section9(2);
  REQUIRE(sols.size() == 1);
  const auto& s = sols.front();
  CHECK(s.k == 3);
  CHECK(s.m == 2);
  CHECK(s.minus_one == GradedDim{{1, 0, 1, 1}});
  CHECK(s.plus_one == GradedDim{{1, 1, 1, 0}});
  CHECK(s.zero == GradedDim{{0, 0, 1, 1}});
}

TEST_CASE("only the dimension-two zero surgery is feasible") {
  // exactness through the sphere forces rank(bc) = 2 in the first triangle,
  // so the zero-surgery dimension must equal 2
  for (int total : {0, 1, 3, 4, 6}) CHECK(solve_section9(total).empty());
}

TEST_CASE("froyshov gap") {
  CHECK(froyshov_gap(4, 2) == 1);
  CHECK(froyshov_gap(2, 2) == 0);
  CHECK(froyshov_gap(10, 4) == 3);
  CHECK_THROWS_AS(froyshov_gap(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(froyshov_gap(5, 2), std::invalid_argument);
}

TEST_CASE("odd-dimension constraint for unit surgeries") {
  CHECK(fukaya_odd_rank(1) == 0);
  CHECK(fukaya_odd_rank(3) == 1);
  CHECK(fukaya_odd_rank(9) == 4);
  CHECK_THROWS_AS(fukaya_odd_rank(4), std::invalid_argument);
  CHECK_THROWS_AS(fukaya_odd_rank(0), std::invalid_argument);
  CHECK_THROWS_AS(fukaya_odd_rank(-3), std::invalid_argument);
  CHECK(fukaya_zero_surgery_match(8, 8));
  CHECK_FALSE(fukaya_zero_surgery_match(8, 10));
}

TEST_CASE("Laurent polynomial arithmetic") {
  LaurentPoly trefoil = laurent({{1, 1}, {0, -1}, {-1, 1}});
  CHECK(trefoil.is_symmetric());
  CHECK(trefoil.eval_at_one() == 1);
  CHECK(second_derivative_at_one(trefoil) == 2);

  LaurentPoly delta = genus1_alexander(2);  // 2t - 3 + 2/t
  CHECK(delta == laurent({{1, 2}, {0, -3}, {-1, 2}}));
  CHECK(delta.eval_at_one() == 1);
  CHECK(second_derivative_at_one(delta) == 4);

  LaurentPoly cabled = cable_substitute(delta);
  CHECK(cabled == laurent({{2, 2}, {0, -3}, {-2, 2}}));
  CHECK(second_derivative_at_one(cabled) == 16);
  CHECK(casson_chi(cabled) == -16);

  LaurentPoly asym = laurent({{1, 1}});
  CHECK_THROWS_AS(casson_chi(asym), std::domain_error);

  CHECK(to_string(delta) == "2*t - 3 + 2*t^-1");
}

TEST_CASE("cable substitution quadruples the second derivative at one") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(-5, 5), span(0, 5);
  for (int t = 0; t < 500; ++t) {
    LaurentPoly p;
    int s = span(rng);
    p.set(0, coeff(rng));
    for (int e = 1; e <= s; ++e) {
      int c = coeff(rng);
      p.set(e, c);
      p.set(-e, c);  // symmetric by construction
    }
    REQUIRE(p.is_symmetric());
    CHECK(second_derivative_at_one(cable_substitute(p)) ==
          4 * second_derivative_at_one(p));
    CHECK(casson_chi(cable_substitute(p)) == 4 * casson_chi(p));
  }
}

TEST_CASE("genus-one normalization evaluates to one at t = 1") {
  for (long long a = -5; a <= 5; ++a) {
    auto p = genus1_alexander(a);
    CHECK(p.eval_at_one() == 1);
    CHECK(p.is_symmetric());
    CHECK(second_derivative_at_one(p) == 2 * a);
  }
}

TEST_CASE("constraint chase produces the documented contradiction") {
  auto rep = section9_contradiction();
  CHECK(rep.contradiction);
  CHECK(rep.alexander_a == 2);
  CHECK(rep.lower_bound == 16);
  CHECK(rep.feasible_dims == std::vector<int>{8, 10});
  CHECK_FALSE(rep.steps.empty());
}

TEST_CASE("chase branches that avoid the contradiction") {
  auto fig8 = section9_contradiction(4);
  CHECK_FALSE(fig8.contradiction);
  bool mentions_fig8 = false;
  for (const auto& s : fig8.steps)
    if (s.find("figure") != std::string::npos) mentions_fig8 = true;
  CHECK(mentions_fig8);

  auto small = section9_contradiction(2, 1);
  CHECK_FALSE(small.contradiction);
  CHECK(small.lower_bound == 8);
  CHECK(small.feasible_dims == std::vector<int>{8, 10});
}
