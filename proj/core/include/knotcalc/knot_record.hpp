#pragma once

#include <optional>
#include <string>
#include <vector>

namespace knotcalc {

/// Shape of the zero-surgery dimension pair for knots with nu_sharp = 0.
/// W: trivial bundle gives r0 + 2, meridional bundle gives r0.
/// V: trivial bundle gives r0, meridional bundle gives r0 + 2.
enum class Shape { W, V };

/// Sign information about a Froyshov-type invariant of a +/-1-surgery.
enum class HSign { neg, zero_or_neg, zero_or_pos, pos, unknown };

HSign negate(HSign s);
std::string to_string(HSign s);
std::optional<HSign> hsign_from_string(const std::string& text);
std::string to_string(Shape s);

/// Tri-state attribute flags.  Unset means unknown, not false.
struct KnotFlags {
  std::optional<bool> fibered;
  std::optional<bool> strongly_quasipositive;
  std::optional<bool> quasipositive;
  std::optional<bool> slice;
  std::optional<bool> rationally_slice;
  std::optional<bool> alternating;
  std::optional<bool> lspace_knot;
  std::optional<bool> positive_sl_transverse;

  friend bool operator==(const KnotFlags&, const KnotFlags&) = default;
};

/// Partial knowledge about a single knot.  Every field except the name is
/// optional; consumers must treat missing fields as unknown.
struct KnotRecord {
  std::string name;
  std::optional<int> nu_sharp;     // zero or odd
  std::optional<int> r0;           // >= |nu_sharp|, same parity as nu_sharp
  std::optional<int> tau_sharp;    // |2*tau_sharp - nu_sharp| <= 1
  std::optional<int> genus;        // Seifert genus, >= 1 when recorded
  std::optional<int> slice_genus;  // >= 0
  std::optional<int> signature;    // even
  std::optional<Shape> shape;      // only meaningful when nu_sharp = 0
  KnotFlags flags;
  HSign froyshov_plus1 = HSign::unknown;   // sign of h of +1-surgery
  HSign froyshov_minus1 = HSign::unknown;  // sign of h of -1-surgery

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// Checks the structural constraints between recorded fields (parity of
/// nu_sharp, r0 bound and parity, tau range, genus bounds, shape usage,
/// even signature).  Returns one message per violated constraint.
std::vector<std::string> structural_violations(const KnotRecord& rec);

}  // namespace knotcalc
