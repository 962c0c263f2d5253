#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "knotcalc/knot_record.hpp"

namespace knotcalc {

/// The mirror record: negates nu_sharp, tau_sharp and the signature,
/// preserves r0, genus, slice genus and shape, and swaps the two Froyshov
/// sign fields with negated sign.  Mirror-invariant flags (fibered,
/// alternating, slice, rationally_slice) carry over; chirality-sensitive
/// flags (quasipositivity, L-space, transverse) become unknown.
KnotRecord mirror(const KnotRecord& rec);

/// Candidates for nu_sharp of a connected sum from the summand values.
/// If either value is zero the sum is the singleton of the other; otherwise
/// {s-1, s, s+1} with s = nuK + nuL, filtered to zero-or-odd values.
std::set<int> nu_of_sum(int nuK, int nuL);

/// epsilon_sharp = 2*tau_sharp - nu_sharp, always in {-1, 0, +1}.
/// Absent value means undetermined.
struct EpsilonValue {
  std::optional<int> value;

  friend bool operator==(const EpsilonValue&, const EpsilonValue&) = default;
};

/// Requires tau_sharp and nu_sharp; throws std::domain_error when the
/// record is inconsistent (|2*tau - nu| > 1).  Returns undetermined when
/// either field is missing.
EpsilonValue epsilon(const KnotRecord& rec);

/// Sum rule: zero is the identity, equal known values propagate, opposite
/// nonzero values (and any unknown input against a nonzero one) yield
/// undetermined.
EpsilonValue epsilon_of_sum(EpsilonValue a, EpsilonValue b);

/// Z/2 law on zero-surgery shapes of nu_sharp = 0 knots; W is the identity.
Shape shape_of_sum(Shape a, Shape b);

/// tau_sharp from nu_sharp of the knot and of its self-sum:
/// tau = (nu(K # K) - nu(K)) / 2.  Throws when the difference is odd.
int tau_from_doubling(int nuK, int nuKK);

enum class Order { greater, less, equivalent, undetermined };

std::string to_string(Order o);

/// Partial order induced by epsilon_sharp of K # mirror(K'):
/// greater when that epsilon is +1, less when -1, equivalent when 0.
Order compare(const KnotRecord& a, const KnotRecord& b);

/// Formal connected sum.  The bool marks a mirrored summand.
struct SumExpr {
  std::vector<std::pair<KnotRecord, bool>> summands;
};

struct SumInvariants {
  /// Empty set means unknown (some summand had no nu_sharp).
  std::set<int> nu_candidates;
  std::optional<int> tau_sharp;  // additive, needs every summand's value
  EpsilonValue eps;
  std::optional<Shape> shape;    // only when every summand has nu = 0
};

SumInvariants sum_invariants(const SumExpr& expr);

}  // namespace knotcalc
