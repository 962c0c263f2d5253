#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "knotcalc/database.hpp"
#include "knotcalc/inference.hpp"

using namespace knotcalc;

namespace {

bool has_statement(const InferenceResult& res, const std::string& needle) {
  for (const auto& s : res.statements)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

bool derived_field(const InferenceResult& res, const std::string& field) {
  for (const auto& d : res.derivations)
    if (d.field == field) return true;
  return false;
}

KnotRecord random_record(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1), chance(0, 3);
  std::uniform_int_distribution<int> nu_d(-5, 5), r_d(0, 8), g_d(1, 4);
  KnotRecord rec;
  rec.name = "rand";
  if (chance(rng) == 0) rec.nu_sharp = nu_d(rng);
  if (chance(rng) == 0) rec.r0 = r_d(rng);
  if (chance(rng) == 0) rec.tau_sharp = nu_d(rng) / 2;
  if (chance(rng) == 0) rec.genus = g_d(rng);
  if (chance(rng) == 0) rec.slice_genus = g_d(rng) - 1;
  if (chance(rng) == 0) rec.signature = 2 * nu_d(rng);
  if (chance(rng) == 0 && (!rec.nu_sharp || *rec.nu_sharp == 0))
    rec.shape = coin(rng) ? Shape::W : Shape::V;
  auto maybe_flag = [&](std::optional<bool>& f) {
    if (chance(rng) == 0) f = coin(rng) == 1;
  };
  maybe_flag(rec.flags.fibered);
  maybe_flag(rec.flags.strongly_quasipositive);
  maybe_flag(rec.flags.quasipositive);
  maybe_flag(rec.flags.slice);
  maybe_flag(rec.flags.rationally_slice);
  maybe_flag(rec.flags.alternating);
  maybe_flag(rec.flags.lspace_knot);
  maybe_flag(rec.flags.positive_sl_transverse);
  return rec;
}

}  // namespace

TEST_CASE("quasipositive non-slice chain pins tau and nu") {
  KnotRecord rec;
  rec.name = "qp";
  rec.flags.quasipositive = true;
  rec.flags.slice = false;
  rec.slice_genus = 2;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.tau_sharp == 2);
  CHECK(res.record.nu_sharp == 3);
  CHECK(res.record.froyshov_plus1 == HSign::neg);
  CHECK(has_statement(res, "linearly independent"));
  // every derivation carries a rule id and an anchor
  for (const auto& d : res.derivations) {
    CHECK_FALSE(d.rule_id.empty());
    CHECK_FALSE(d.anchor.empty());
  }
  CHECK(derived_field(res, "tau_sharp"));
  CHECK(derived_field(res, "nu_sharp"));
}

TEST_CASE("rationally slice knots collapse to the identity profile") {
  KnotRecord rec;
  rec.name = "rs";
  rec.flags.rationally_slice = true;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.nu_sharp == 0);
  CHECK(res.record.tau_sharp == 0);
  CHECK(res.record.shape == Shape::W);
}

TEST_CASE("r0 = 1 forces a trefoil") {
  KnotRecord rec;
  rec.name = "r1";
  rec.r0 = 1;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK_FALSE(res.record.nu_sharp.has_value());  // still two candidates
  bool nu_narrowed = false;
  for (const auto& d : res.derivations)
    if (d.field == "nu_sharp" && d.after == "{-1,1}") nu_narrowed = true;
  CHECK(nu_narrowed);
  CHECK(has_statement(res, "trefoil"));
  CHECK(res.record.genus == 1);
  CHECK(res.record.flags.fibered == true);
}

TEST_CASE("even nonzero nu is contradictory") {
  KnotRecord rec;
  rec.name = "bad";
  rec.nu_sharp = 2;
  auto res = apply_rules(rec);
  CHECK_FALSE(res.consistent());
  REQUIRE_FALSE(res.contradictions.empty());
  CHECK(res.contradictions.front().rule_id == "structural");
}

TEST_CASE("parity violations that survive the structural check still die") {
  KnotRecord rec;
  rec.name = "bad2";
  rec.tau_sharp = 3;
  rec.nu_sharp = -3;  // |2 tau - nu| = 9
  auto res = apply_rules(rec);
  CHECK_FALSE(res.consistent());
}

TEST_CASE("L-space knot with known genus") {
  KnotRecord rec;
  rec.name = "ls";
  rec.flags.lspace_knot = true;
  rec.genus = 2;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.nu_sharp == 3);
  CHECK(res.record.r0 == 3);
  CHECK(res.record.flags.fibered == true);
  CHECK(res.record.flags.strongly_quasipositive == true);
  CHECK(res.record.flags.quasipositive == true);
}

TEST_CASE("alternating knot reads tau off the signature") {
  KnotRecord rec;
  rec.name = "alt";
  rec.flags.alternating = true;
  rec.signature = -4;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.tau_sharp == 2);
}

TEST_CASE("V shape pins both Froyshov signs") {
  KnotRecord rec;
  rec.name = "v";
  rec.nu_sharp = 0;
  rec.r0 = 4;
  rec.shape = Shape::V;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.froyshov_plus1 == HSign::neg);
  CHECK(res.record.froyshov_minus1 == HSign::pos);
}

TEST_CASE("inference never narrows an asserted value away silently") {
  auto db = seed_database();
  for (const auto& [name, rec] : db.records) {
    auto res = apply_rules(rec);
    REQUIRE(res.consistent());
    if (rec.nu_sharp) CHECK(res.record.nu_sharp == rec.nu_sharp);
    if (rec.r0) CHECK(res.record.r0 == rec.r0);
    if (rec.tau_sharp) CHECK(res.record.tau_sharp == rec.tau_sharp);
    if (rec.genus) CHECK(res.record.genus == rec.genus);
    if (rec.slice_genus) CHECK(res.record.slice_genus == rec.slice_genus);
    if (rec.shape) CHECK(res.record.shape == rec.shape);
  }
}

TEST_CASE("monotonicity: enriched records stay fixed under a second pass") {
  auto db = seed_database();
  for (const auto& [name, rec] : db.records) {
    auto once = apply_rules(rec);
    REQUIRE(once.consistent());
    auto twice = apply_rules(once.record);
    REQUIRE(twice.consistent());
    CHECK(twice.record == once.record);
  }
}

TEST_CASE("rule order does not change the fixpoint") {
  std::mt19937 rng(59);
  std::vector<int> order;
  for (int i = 1; i <= 15; ++i) order.push_back(i);

  auto db = seed_database();
  for (const auto& [name, rec] : db.records) {
    auto base = apply_rules(rec);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      InferenceOptions opts;
      opts.rule_order = order;
      auto res = apply_rules(rec, opts);
      CHECK(res.record == base.record);
      CHECK(res.statements == base.statements);
    }
  }

  // random records, smaller domain to keep the chase quick
  int compared = 0;
  for (int t = 0; t < 1000 || compared < 500; ++t) {
    if (t > 4000) break;
    KnotRecord rec = random_record(rng);
    InferenceOptions opts;
    opts.nu_bound = 25;
    auto base = apply_rules(rec, opts);
    if (!base.consistent()) continue;
    ++compared;
    for (int s = 0; s < 3; ++s) {
      std::shuffle(order.begin(), order.end(), rng);
      InferenceOptions shuffled;
      shuffled.nu_bound = 25;
      shuffled.rule_order = order;
      auto res = apply_rules(rec, shuffled);
      CHECK(res.consistent());
      CHECK(res.record == base.record);
      CHECK(res.statements == base.statements);
    }
  }
  CHECK(compared >= 500);
}

TEST_CASE("check_consistency flags exactly the broken records") {
  auto db = seed_database();
  for (const auto& [name, rec] : db.records)
    CHECK(check_consistency(rec).empty());
  KnotRecord bad;
  bad.name = "bad";
  bad.nu_sharp = 3;
  bad.r0 = 1;
  CHECK_FALSE(check_consistency(bad).empty());
}

TEST_CASE("positive transverse representative forces positive nu") {
  KnotRecord rec;
  rec.name = "psl";
  rec.flags.positive_sl_transverse = true;
  auto res = apply_rules(rec);
  REQUIRE(res.consistent());
  CHECK(res.record.froyshov_plus1 == HSign::neg);
  CHECK(has_statement(res, "linearly independent"));
}

TEST_CASE("rule ids outside the table are rejected") {
  KnotRecord rec;
  rec.name = "x";
  InferenceOptions opts;
  opts.rule_order = {1, 16};
  CHECK_THROWS_AS(apply_rules(rec, opts), std::invalid_argument);
}
