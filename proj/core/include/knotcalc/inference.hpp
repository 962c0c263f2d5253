#pragma once

#include <string>
#include <vector>

#include "knotcalc/knot_record.hpp"

namespace knotcalc {

/// One narrowing step in the forward chain: a candidate set shrank.
struct Derivation {
  std::string field;
  std::string before;
  std::string after;
  std::string rule_id;
  std::string anchor;  // statement of the theorem behind the rule
};

struct Contradiction {
  std::string rule_id;
  std::string message;
};

struct InferenceOptions {
  /// Half-width of the initial candidate interval for nu_sharp and
  /// tau_sharp, and upper bound for r0 / genus / slice genus domains.
  int nu_bound = 99;
  /// Permutation of {1..15} selecting the rule application order.
  /// Empty means the default order R1..R15.
  std::vector<int> rule_order;
};

struct InferenceResult {
  KnotRecord record;  // enriched copy of the input
  std::vector<Derivation> derivations;
  std::vector<Contradiction> contradictions;
  /// Non-numeric consequences (classification claims, independence
  /// statements), each prefixed by the rule that produced it.
  std::vector<std::string> statements;

  bool consistent() const { return contradictions.empty(); }
};

/// Runs the rule set R1..R15 to a fixpoint over candidate sets seeded from
/// the record's known fields.  Known values are never widened; a field whose
/// candidate set empties produces a Contradiction and stops the chase.
InferenceResult apply_rules(const KnotRecord& rec,
                            const InferenceOptions& opts = {});

/// Structural violations plus any contradictions found by the rule chase.
std::vector<Contradiction> check_consistency(const KnotRecord& rec,
                                             const InferenceOptions& opts = {});

}  // namespace knotcalc
