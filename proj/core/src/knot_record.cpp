#include "knotcalc/knot_record.hpp"

#include <cstdlib>

namespace knotcalc {

HSign negate(HSign s) {
  switch (s) {
    case HSign::neg: return HSign::pos;
    case HSign::pos: return HSign::neg;
    case HSign::zero_or_neg: return HSign::zero_or_pos;
    case HSign::zero_or_pos: return HSign::zero_or_neg;
    case HSign::unknown: return HSign::unknown;
  }
  return HSign::unknown;
}

std::string to_string(HSign s) {
  switch (s) {
    case HSign::neg: return "neg";
    case HSign::pos: return "pos";
    case HSign::zero_or_neg: return "zero_or_neg";
    case HSign::zero_or_pos: return "zero_or_pos";
    case HSign::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<HSign> hsign_from_string(const std::string& text) {
  if (text == "neg") return HSign::neg;
  if (text == "pos") return HSign::pos;
  if (text == "zero_or_neg") return HSign::zero_or_neg;
  if (text == "zero_or_pos") return HSign::zero_or_pos;
  if (text == "unknown") return HSign::unknown;
  return std::nullopt;
}

std::string to_string(Shape s) { return s == Shape::W ? "W" : "V"; }

std::vector<std::string> structural_violations(const KnotRecord& rec) {
  std::vector<std::string> out;
  const auto& nu = rec.nu_sharp;
  if (nu && *nu != 0 && *nu % 2 == 0)
    out.push_back("nu_sharp must be zero or odd");
  if (rec.r0) {
    if (*rec.r0 < 0) out.push_back("r0 must be nonnegative");
    if (nu) {
      if (*rec.r0 < std::abs(*nu)) out.push_back("r0 must be >= |nu_sharp|");
      if ((*rec.r0 - *nu) % 2 != 0)
        out.push_back("r0 must have the parity of nu_sharp");
    }
  }
  if (rec.tau_sharp && nu && std::abs(2 * *rec.tau_sharp - *nu) > 1)
    out.push_back("|2*tau_sharp - nu_sharp| must be <= 1");
  if (rec.genus && *rec.genus < 1)
    out.push_back("genus must be >= 1 when recorded");
  if (rec.slice_genus) {
    if (*rec.slice_genus < 0) out.push_back("slice genus must be >= 0");
    if (rec.genus && *rec.slice_genus > *rec.genus)
      out.push_back("slice genus must be <= genus");
    if (nu) {
      if (*rec.slice_genus == 0 && *nu != 0)
        out.push_back("slice genus 0 forces nu_sharp = 0");
      if (*rec.slice_genus > 0 && std::abs(*nu) > 2 * *rec.slice_genus - 1)
        out.push_back("|nu_sharp| must be <= 2*slice_genus - 1");
    }
  }
  if (rec.signature && *rec.signature % 2 != 0)
    out.push_back("signature must be even");
  if (rec.shape && nu && *nu != 0)
    out.push_back("shape may be set only when nu_sharp = 0");
  if (rec.flags.slice == true && nu && *nu != 0)
    out.push_back("a slice knot has nu_sharp = 0");
  if (rec.flags.slice == true && rec.tau_sharp && *rec.tau_sharp != 0)
    out.push_back("a slice knot has tau_sharp = 0");
  return out;
}

}  // namespace knotcalc
