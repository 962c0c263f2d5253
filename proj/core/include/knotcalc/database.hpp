#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "knotcalc/knot_record.hpp"

namespace knotcalc {

enum class Provenance { asserted, derived };

struct SourceTag {
  Provenance kind = Provenance::asserted;
  std::string rule_id;  // set when kind == derived
};

struct Database {
  std::map<std::string, KnotRecord> records;
  /// Per record, per field name, how the value got there.
  std::map<std::string, std::map<std::string, SourceTag>> provenance;
};

/// Strict JSON conversion.  Unknown keys, wrong types and structural
/// violations are rejected with a message naming the offending field.
KnotRecord record_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const KnotRecord& rec);

/// Loads a JSON array of records, requiring unique names.  Each record is
/// checked for consistency (structure plus rule chase); any failure aborts
/// the load with the violated constraint in the message unless force is set.
Database load_database(const std::string& path, bool force = false);
Database database_from_json(const nlohmann::json& j, bool force = false);

/// Canonical serialization: records sorted by name, keys sorted, two-space
/// indent, trailing newline.  save(load(x)) is the identity on canonical
/// files.
nlohmann::json database_to_json(const Database& db);
void save_database(const Database& db, const std::string& path);

/// The built-in records: unknot, both trefoils, the figure eight, the
/// (2,5) torus knot and its mirror.
Database seed_database();

}  // namespace knotcalc
