#include "knotcalc/database.hpp"

#include <fstream>
#include <stdexcept>

#include "knotcalc/inference.hpp"

namespace knotcalc {

using nlohmann::json;

namespace {

const char* kFlagKeys[] = {"fibered",
                           "strongly_quasipositive",
                           "quasipositive",
                           "slice",
                           "rationally_slice",
                           "alternating",
                           "lspace_knot",
                           "positive_sl_transverse"};

std::optional<bool>& flag_ref(KnotFlags& f, const std::string& key) {
  if (key == "fibered") return f.fibered;
  if (key == "strongly_quasipositive") return f.strongly_quasipositive;
  if (key == "quasipositive") return f.quasipositive;
  if (key == "slice") return f.slice;
  if (key == "rationally_slice") return f.rationally_slice;
  if (key == "alternating") return f.alternating;
  if (key == "lspace_knot") return f.lspace_knot;
  if (key == "positive_sl_transverse") return f.positive_sl_transverse;
  throw std::invalid_argument("unknown flag '" + key + "'");
}

int require_int(const json& j, const std::string& key) {
  if (!j.is_number_integer())
    throw std::invalid_argument("field '" + key + "' must be an integer");
  return j.get<int>();
}

}  // namespace

KnotRecord record_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  KnotRecord rec;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      if (!value.is_string())
        throw std::invalid_argument("field 'name' must be a string");
      rec.name = value.get<std::string>();
    } else if (key == "nu_sharp") {
      rec.nu_sharp = require_int(value, key);
    } else if (key == "r0") {
      rec.r0 = require_int(value, key);
    } else if (key == "tau_sharp") {
      rec.tau_sharp = require_int(value, key);
    } else if (key == "genus") {
      rec.genus = require_int(value, key);
    } else if (key == "slice_genus") {
      rec.slice_genus = require_int(value, key);
    } else if (key == "signature") {
      rec.signature = require_int(value, key);
    } else if (key == "shape") {
      if (value == "W")
        rec.shape = Shape::W;
      else if (value == "V")
        rec.shape = Shape::V;
      else
        throw std::invalid_argument("field 'shape' must be \"W\" or \"V\"");
    } else if (key == "flags") {
      if (!value.is_object())
        throw std::invalid_argument("field 'flags' must be an object");
      for (const auto& [fk, fv] : value.items()) {
        if (!fv.is_boolean())
          throw std::invalid_argument("flag '" + fk + "' must be a boolean");
        flag_ref(rec.flags, fk) = fv.get<bool>();
      }
    } else if (key == "froyshov_plus1" || key == "froyshov_minus1") {
      if (!value.is_string())
        throw std::invalid_argument("field '" + key + "' must be a string");
      auto h = hsign_from_string(value.get<std::string>());
      if (!h)
        throw std::invalid_argument("field '" + key + "' has an invalid sign value");
      (key == "froyshov_plus1" ? rec.froyshov_plus1 : rec.froyshov_minus1) = *h;
    } else {
      throw std::invalid_argument("unknown field '" + key + "'");
    }
  }
  if (rec.name.empty())
    throw std::invalid_argument("record is missing a non-empty 'name'");
  return rec;
}

json record_to_json(const KnotRecord& rec) {
  json j = json::object();
  j["name"] = rec.name;
  if (rec.nu_sharp) j["nu_sharp"] = *rec.nu_sharp;
  if (rec.r0) j["r0"] = *rec.r0;
  if (rec.tau_sharp) j["tau_sharp"] = *rec.tau_sharp;
  if (rec.genus) j["genus"] = *rec.genus;
  if (rec.slice_genus) j["slice_genus"] = *rec.slice_genus;
  if (rec.signature) j["signature"] = *rec.signature;
  if (rec.shape) j["shape"] = to_string(*rec.shape);
  json flags = json::object();
  KnotFlags copy = rec.flags;
  for (const char* key : kFlagKeys) {
    const auto& f = flag_ref(copy, key);
    if (f) flags[key] = *f;
  }
  if (!flags.empty()) j["flags"] = flags;
  if (rec.froyshov_plus1 != HSign::unknown)
    j["froyshov_plus1"] = to_string(rec.froyshov_plus1);
  if (rec.froyshov_minus1 != HSign::unknown)
    j["froyshov_minus1"] = to_string(rec.froyshov_minus1);
  return j;
}

Database database_from_json(const json& j, bool force) {
  if (!j.is_array())
    throw std::invalid_argument("database must be a JSON array of records");
  Database db;
  for (const auto& item : j) {
    KnotRecord rec = record_from_json(item);
    if (db.records.count(rec.name))
      throw std::invalid_argument("duplicate record name '" + rec.name + "'");
    if (!force) {
      auto contras = check_consistency(rec);
      if (!contras.empty())
        throw std::invalid_argument("record '" + rec.name + "' is inconsistent: " +
                                    contras.front().message + " [" +
                                    contras.front().rule_id + "]");
    }
    for (const auto& [key, value] : item.items()) {
      if (key == "name") continue;
      if (key == "flags") {
        for (const auto& [fk, fv] : value.items())
          db.provenance[rec.name][fk] = {Provenance::asserted, ""};
      } else {
        db.provenance[rec.name][key] = {Provenance::asserted, ""};
      }
    }
    db.records.emplace(rec.name, std::move(rec));
  }
  return db;
}

Database load_database(const std::string& path, bool force) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open database file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return database_from_json(j, force);
}

json database_to_json(const Database& db) {
  json arr = json::array();
  for (const auto& [name, rec] : db.records) arr.push_back(record_to_json(rec));
  return arr;
}

void save_database(const Database& db, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write database file '" + path + "'");
  out << database_to_json(db).dump(2) << "\n";
}

Database seed_database() {
  json seeds = json::array({
      {{"name", "unknot"},
       {"nu_sharp", 0},
       {"r0", 0},
       {"tau_sharp", 0},
       {"slice_genus", 0},
       {"signature", 0},
       {"shape", "W"},
       {"flags", {{"fibered", true}, {"slice", true}, {"rationally_slice", true}}}},
      {{"name", "right-trefoil"},
       {"nu_sharp", 1},
       {"r0", 1},
       {"tau_sharp", 1},
       {"genus", 1},
       {"slice_genus", 1},
       {"signature", -2},
       {"flags",
        {{"fibered", true},
         {"alternating", true},
         {"strongly_quasipositive", true},
         {"quasipositive", true},
         {"lspace_knot", true},
         {"positive_sl_transverse", true},
         {"slice", false}}}},
      {{"name", "left-trefoil"},
       {"nu_sharp", -1},
       {"r0", 1},
       {"tau_sharp", -1},
       {"genus", 1},
       {"slice_genus", 1},
       {"signature", 2},
       {"flags", {{"fibered", true}, {"alternating", true}, {"slice", false}}}},
      {{"name", "fig8"},
       {"nu_sharp", 0},
       {"r0", 2},
       {"tau_sharp", 0},
       {"genus", 1},
       {"slice_genus", 1},
       {"signature", 0},
       {"shape", "W"},
       {"flags", {{"fibered", true}, {"alternating", true}, {"slice", false}}}},
      {{"name", "t25"},
       {"nu_sharp", 3},
       {"r0", 3},
       {"tau_sharp", 2},
       {"genus", 2},
       {"slice_genus", 2},
       {"signature", -4},
       {"flags",
        {{"fibered", true},
         {"strongly_quasipositive", true},
         {"quasipositive", true},
         {"lspace_knot", true},
         {"positive_sl_transverse", true},
         {"slice", false}}}},
      {{"name", "t25-mirror"},
       {"nu_sharp", -3},
       {"r0", 3},
       {"tau_sharp", -2},
       {"genus", 2},
       {"slice_genus", 2},
       {"signature", 4},
       {"flags", {{"fibered", true}, {"slice", false}}}},
  });
  return database_from_json(seeds, false);
}

}  // namespace knotcalc
