#include <doctest.h>

#include <stdexcept>

#include <random>

#include "knotcalc/concordance.hpp"
#include "knotcalc/database.hpp"

using namespace knotcalc;

namespace {

KnotRecord random_consistent_record(std::mt19937& rng) {
  std::uniform_int_distribution<int> nu_pick(-4, 4), extra(0, 3), coin(0, 1);
  KnotRecord rec;
  rec.name = "rand";
  int nu = nu_pick(rng);
  if (nu != 0 && nu % 2 == 0) nu = nu > 0 ? nu - 1 : nu + 1;
  rec.nu_sharp = nu;
  rec.r0 = std::abs(nu) + 2 * extra(rng);
  // tau with |2 tau - nu| <= 1
  if (nu == 0)
    rec.tau_sharp = 0;
  else
    rec.tau_sharp = coin(rng) ? (nu - 1) / 2 : (nu + 1) / 2;
  int gs_min = nu == 0 ? 0 : (std::abs(nu) + 1) / 2;  // |nu| <= 2 gs - 1
  if (nu != 0 && std::abs(nu) > 2 * gs_min - 1) ++gs_min;
  int gs = gs_min + extra(rng);
  rec.slice_genus = gs;
  rec.genus = std::max(1, gs + extra(rng));
  if (nu == 0 && coin(rng)) rec.shape = coin(rng) ? Shape::W : Shape::V;
  if (coin(rng)) rec.signature = 2 * nu_pick(rng);
  if (gs == 0) {
    rec.flags.slice = true;
    rec.tau_sharp = 0;
    if (rec.shape) rec.shape = Shape::W;  // slice knots are W-shaped
  }
  return rec;
}

}  // namespace

TEST_CASE("mirror negates the signed invariants") {
  auto db = seed_database();
  auto m = mirror(db.records.at("right-trefoil"));
  CHECK(m.nu_sharp == -1);
  CHECK(m.tau_sharp == -1);
  CHECK(m.signature == 2);
  CHECK(m.r0 == 1);
  CHECK(m.genus == 1);
  CHECK(m.slice_genus == 1);
  CHECK(m.name == "mirror(right-trefoil)");
  CHECK_FALSE(m.flags.strongly_quasipositive.has_value());
  CHECK_FALSE(m.flags.lspace_knot.has_value());
  CHECK(m.flags.fibered == true);
  CHECK(m.flags.alternating == true);
}

TEST_CASE("mirror swaps the Froyshov sign fields with negation") {
  KnotRecord rec;
  rec.name = "x";
  rec.froyshov_plus1 = HSign::neg;
  rec.froyshov_minus1 = HSign::zero_or_pos;
  auto m = mirror(rec);
  CHECK(m.froyshov_plus1 == HSign::zero_or_neg);
  CHECK(m.froyshov_minus1 == HSign::pos);
}

TEST_CASE("mirror is an involution") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10000; ++t) {
    KnotRecord rec = random_consistent_record(rng);
    KnotRecord mm = mirror(mirror(rec));
    CHECK(mm == rec);
  }
  // chirality-sensitive flags are cleared once and stay cleared
  KnotRecord rec;
  rec.name = "chiral";
  rec.flags.quasipositive = true;
  auto m1 = mirror(rec);
  CHECK_FALSE(m1.flags.quasipositive.has_value());
  CHECK(mirror(mirror(m1)) == m1);
}

TEST_CASE("nu of a connected sum") {
  CHECK(nu_of_sum(0, 5) == std::set<int>{5});
  CHECK(nu_of_sum(-3, 0) == std::set<int>{-3});
  CHECK(nu_of_sum(0, 0) == std::set<int>{0});
  CHECK(nu_of_sum(3, 3) == std::set<int>{5, 7});
  CHECK(nu_of_sum(1, -1) == std::set<int>{-1, 0, 1});
  CHECK(nu_of_sum(1, 1) == std::set<int>{1, 3});
  CHECK(nu_of_sum(-1, -3) == std::set<int>{-5, -3});
  CHECK_THROWS_AS(nu_of_sum(2, 1), std::invalid_argument);
}

TEST_CASE("nu_of_sum is a singleton exactly when a summand vanishes") {
  for (int a = -7; a <= 7; ++a) {
    if (a != 0 && a % 2 == 0) continue;
    for (int b = -7; b <= 7; ++b) {
      if (b != 0 && b % 2 == 0) continue;
      auto s = nu_of_sum(a, b);
      CHECK(s == nu_of_sum(b, a));
      if (a == 0 || b == 0)
        CHECK(s.size() == 1);
      else
        CHECK(s.size() >= 2);
      for (int v : s) CHECK((v == 0 || v % 2 != 0));
    }
  }
}

TEST_CASE("epsilon from a record") {
  KnotRecord rec;
  rec.name = "x";
  rec.nu_sharp = 3;
  rec.tau_sharp = 2;
  CHECK(epsilon(rec) == EpsilonValue{1});
  rec.tau_sharp = 1;
  CHECK(epsilon(rec) == EpsilonValue{-1});
  rec.nu_sharp = 0;
  rec.tau_sharp = 0;
  CHECK(epsilon(rec) == EpsilonValue{0});
  rec.tau_sharp = {};
  CHECK(epsilon(rec) == EpsilonValue{});
  rec.nu_sharp = 5;
  rec.tau_sharp = 1;
  CHECK_THROWS_AS(epsilon(rec), std::domain_error);
}

TEST_CASE("epsilon sum rule table") {
  EpsilonValue plus{1}, minus{-1}, zero{0}, unk{};
  CHECK(epsilon_of_sum(zero, plus) == plus);
  CHECK(epsilon_of_sum(minus, zero) == minus);
  CHECK(epsilon_of_sum(zero, zero) == zero);
  CHECK(epsilon_of_sum(plus, plus) == plus);
  CHECK(epsilon_of_sum(minus, minus) == minus);
  CHECK(epsilon_of_sum(plus, minus) == unk);
  CHECK(epsilon_of_sum(minus, plus) == unk);
  CHECK(epsilon_of_sum(unk, plus) == unk);
  CHECK(epsilon_of_sum(plus, unk) == unk);
  CHECK(epsilon_of_sum(unk, zero) == unk);
  CHECK(epsilon_of_sum(zero, unk) == unk);
  // exhaustive commutativity and zero-identity over the known values
  for (auto a : {plus, minus, zero, unk})
    for (auto b : {plus, minus, zero, unk}) {
      CHECK(epsilon_of_sum(a, b) == epsilon_of_sum(b, a));
      if (a.value == 0) CHECK(epsilon_of_sum(a, b) == b);
    }
}

TEST_CASE("shape group law") {
  CHECK(shape_of_sum(Shape::W, Shape::W) == Shape::W);
  CHECK(shape_of_sum(Shape::W, Shape::V) == Shape::V);
  CHECK(shape_of_sum(Shape::V, Shape::W) == Shape::V);
  CHECK(shape_of_sum(Shape::V, Shape::V) == Shape::W);
  // associativity, exhaustively
  for (auto a : {Shape::W, Shape::V})
    for (auto b : {Shape::W, Shape::V})
      for (auto c : {Shape::W, Shape::V})
        CHECK(shape_of_sum(shape_of_sum(a, b), c) ==
              shape_of_sum(a, shape_of_sum(b, c)));
}

TEST_CASE("tau from the doubling trick") {
  CHECK(tau_from_doubling(1, 3) == 1);    // right trefoil
  CHECK(tau_from_doubling(-1, -3) == -1); // left trefoil
  CHECK(tau_from_doubling(0, 0) == 0);
  CHECK(tau_from_doubling(3, 7) == 2);    // (2,5) torus knot
  CHECK_THROWS_AS(tau_from_doubling(1, 2), std::invalid_argument);
}

TEST_CASE("epsilon of the mirror is the negative") {
  std::mt19937 rng(41);
  for (int t = 0; t < 10000; ++t) {
    KnotRecord rec = random_consistent_record(rng);
    auto e = epsilon(rec);
    auto em = epsilon(mirror(rec));
    REQUIRE(e.value.has_value());
    REQUIRE(em.value.has_value());
    CHECK(*em.value == -*e.value);
  }
}

TEST_CASE("comparison examples and antisymmetry") {
  auto db = seed_database();
  const auto& rt = db.records.at("right-trefoil");
  const auto& lt = db.records.at("left-trefoil");
  const auto& un = db.records.at("unknot");
  const auto& f8 = db.records.at("fig8");
  CHECK(compare(rt, un) == Order::greater);
  CHECK(compare(un, rt) == Order::less);
  CHECK(compare(lt, un) == Order::less);
  CHECK(compare(un, f8) == Order::equivalent);
  CHECK(compare(rt, lt) == Order::greater);
  CHECK(compare(rt, rt) == Order::undetermined);  // equal nonzero epsilons
  std::mt19937 rng(43);
  for (int t = 0; t < 10000; ++t) {
    KnotRecord a = random_consistent_record(rng);
    KnotRecord b = random_consistent_record(rng);
    Order ab = compare(a, b);
    Order ba = compare(b, a);
    switch (ab) {
      case Order::greater: CHECK(ba == Order::less); break;
      case Order::less: CHECK(ba == Order::greater); break;
      default: CHECK(ab == ba); break;
    }
  }
}

TEST_CASE("sum invariants fold") {
  auto db = seed_database();
  SumExpr expr;
  expr.summands.push_back({db.records.at("right-trefoil"), false});
  expr.summands.push_back({db.records.at("right-trefoil"), false});
  auto inv = sum_invariants(expr);
  CHECK(inv.nu_candidates == std::set<int>{1, 3});
  CHECK(inv.tau_sharp == 2);
  CHECK(inv.eps == EpsilonValue{1});
  CHECK_FALSE(inv.shape.has_value());

  SumExpr cancel;
  cancel.summands.push_back({db.records.at("right-trefoil"), false});
  cancel.summands.push_back({db.records.at("right-trefoil"), true});
  auto cinv = sum_invariants(cancel);
  CHECK(cinv.nu_candidates == std::set<int>{-1, 0, 1});
  CHECK(cinv.tau_sharp == 0);
  CHECK(cinv.eps == EpsilonValue{});  // opposite nonzero epsilons

  SumExpr shapes;
  shapes.summands.push_back({db.records.at("fig8"), false});
  shapes.summands.push_back({db.records.at("fig8"), false});
  auto sinv = sum_invariants(shapes);
  CHECK(sinv.nu_candidates == std::set<int>{0});
  CHECK(sinv.tau_sharp == 0);
  CHECK(sinv.shape == Shape::W);

  SumExpr empty;
  auto einv = sum_invariants(empty);
  CHECK(einv.nu_candidates == std::set<int>{0});
  CHECK(einv.tau_sharp == 0);
  CHECK(einv.eps == EpsilonValue{0});
  CHECK(einv.shape == Shape::W);
}
