#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>

#include "knotcalc/database.hpp"

using namespace knotcalc;
using nlohmann::json;

TEST_CASE("seed database contents") {
  auto db = seed_database();
  REQUIRE(db.records.size() == 6);
  CHECK(db.records.count("unknot"));
  CHECK(db.records.count("right-trefoil"));
  CHECK(db.records.count("left-trefoil"));
  CHECK(db.records.count("fig8"));
  CHECK(db.records.count("t25"));
  CHECK(db.records.count("t25-mirror"));
  CHECK(db.records.at("t25").nu_sharp == 3);
  CHECK(db.records.at("fig8").shape == Shape::W);
  CHECK(db.provenance.at("t25").at("nu_sharp").kind == Provenance::asserted);
}

TEST_CASE("record json round trip") {
  auto db = seed_database();
  for (const auto& [name, rec] : db.records) {
    json j = record_to_json(rec);
    KnotRecord back = record_from_json(j);
    CHECK(back == rec);
  }
}

TEST_CASE("unknown keys are rejected") {
  json j = {{"name", "x"}, {"nu_shrap", 1}};
  CHECK_THROWS_WITH_AS(record_from_json(j), "unknown field 'nu_shrap'",
                       std::invalid_argument);
  json f = {{"name", "x"}, {"flags", {{"quasinegative", true}}}};
  CHECK_THROWS_AS(record_from_json(f), std::invalid_argument);
}

TEST_CASE("type and value errors are rejected") {
  CHECK_THROWS_AS(record_from_json(json{{"name", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(record_from_json(json{{"name", "x"}, {"nu_sharp", "3"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(record_from_json(json{{"name", "x"}, {"shape", "X"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(record_from_json(json{{"name", "x"}, {"froyshov_plus1", "up"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(record_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(record_from_json(json{{"nu_sharp", 1}}), std::invalid_argument);
}

TEST_CASE("inconsistent records abort the load unless forced") {
  json j = json::array({{{"name", "bad"}, {"nu_sharp", 2}}});
  CHECK_THROWS_AS(database_from_json(j, false), std::invalid_argument);
  auto db = database_from_json(j, true);
  CHECK(db.records.at("bad").nu_sharp == 2);
}

TEST_CASE("duplicate names are rejected") {
  json j = json::array({{{"name", "k"}}, {{"name", "k"}}});
  CHECK_THROWS_AS(database_from_json(j, false), std::invalid_argument);
}

TEST_CASE("save then load is the identity on canonical files") {
  auto db = seed_database();
  std::string path = "test_db_roundtrip.json";
  save_database(db, path);
  auto loaded = load_database(path);
  REQUIRE(loaded.records.size() == db.records.size());
  for (const auto& [name, rec] : db.records) CHECK(loaded.records.at(name) == rec);
  // byte-identical second save
  std::string path2 = "test_db_roundtrip2.json";
  save_database(loaded, path2);
  std::ifstream a(path), b(path2);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("missing files fail cleanly") {
  CHECK_THROWS_AS(load_database("does_not_exist.json"), std::invalid_argument);
}
