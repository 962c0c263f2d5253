#include "knotcalc/inference.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotcalc {

namespace {

enum Field {
  F_NU, F_R0, F_TAU, F_GENUS, F_GS, F_SHAPE, F_HP1, F_HM1,
  F_FIBERED, F_SQP, F_QP, F_SLICE, F_RSLICE, F_ALT, F_LSPACE, F_PSL,
  F_COUNT
};

const char* kFieldName[F_COUNT] = {
    "nu_sharp", "r0", "tau_sharp", "genus", "slice_genus", "shape",
    "froyshov_plus1", "froyshov_minus1",
    "fibered", "strongly_quasipositive", "quasipositive", "slice",
    "rationally_slice", "alternating", "lspace_knot", "positive_sl_transverse"};

bool is_flag(int f) { return f >= F_FIBERED; }

std::string render(int field, const std::set<int>& s) {
  if (s.empty()) return "{}";
  auto one = [&](int v) -> std::string {
    if (field == F_SHAPE) return v == 0 ? "W" : "V";
    if (is_flag(field)) return v ? "true" : "false";
    return std::to_string(v);
  };
  if (s.size() > 16 && field != F_SHAPE && !is_flag(field)) {
    std::ostringstream os;
    os << "{" << *s.begin() << ".." << *s.rbegin() << " | " << s.size()
       << " values}";
    return os.str();
  }
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += one(v);
    first = false;
  }
  return out + "}";
}

struct Work {
  std::set<int> dom[F_COUNT];
  std::optional<int> sigma;
  bool shape_asserted = false;
};

std::set<int> interval(int lo, int hi) {
  std::set<int> s;
  for (int v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

std::set<int> hsign_dom(HSign h) {
  switch (h) {
    case HSign::neg: return {-1};
    case HSign::pos: return {1};
    case HSign::zero_or_neg: return {-1, 0};
    case HSign::zero_or_pos: return {0, 1};
    case HSign::unknown: return {-1, 0, 1};
  }
  return {-1, 0, 1};
}

HSign dom_to_hsign(const std::set<int>& s) {
  if (s == std::set<int>{-1}) return HSign::neg;
  if (s == std::set<int>{1}) return HSign::pos;
  if (s == std::set<int>{-1, 0}) return HSign::zero_or_neg;
  if (s == std::set<int>{0, 1} || s == std::set<int>{0}) return HSign::zero_or_pos;
  return HSign::unknown;
}

class Engine {
 public:
  Engine(const KnotRecord& rec, const InferenceOptions& opts)
      : rec_(rec), bound_(std::max(1, opts.nu_bound)) {
    seed();
  }

  InferenceResult run(const std::vector<int>& order) {
    bool changed = true;
    while (changed && alive_) {
      changed = false;
      for (int r : order) {
        if (!alive_) break;
        changed_this_rule_ = false;
        apply_rule(r);
        changed = changed || changed_this_rule_;
      }
    }
    if (alive_) emit_statements();
    return harvest();
  }

 private:
  KnotRecord rec_;
  int bound_;
  Work w_;
  bool alive_ = true;
  bool changed_this_rule_ = false;
  std::vector<Derivation> derivs_;
  std::vector<Contradiction> contras_;
  std::vector<std::string> statements_;

  void seed() {
    auto num = [&](int f, std::optional<int> v, int lo, int hi) {
      w_.dom[f] = v ? std::set<int>{*v} : interval(lo, hi);
    };
    num(F_NU, rec_.nu_sharp, -bound_, bound_);
    num(F_TAU, rec_.tau_sharp, -bound_, bound_);
    num(F_R0, rec_.r0, 0, bound_);
    num(F_GENUS, rec_.genus, 1, bound_);
    num(F_GS, rec_.slice_genus, 0, bound_);
    if (rec_.shape) {
      w_.dom[F_SHAPE] = {*rec_.shape == Shape::W ? 0 : 1};
      w_.shape_asserted = true;
    } else {
      w_.dom[F_SHAPE] = {0, 1};
    }
    w_.dom[F_HP1] = hsign_dom(rec_.froyshov_plus1);
    w_.dom[F_HM1] = hsign_dom(rec_.froyshov_minus1);
    auto flag = [&](int f, std::optional<bool> v) {
      w_.dom[f] = v ? std::set<int>{*v ? 1 : 0} : std::set<int>{0, 1};
    };
    flag(F_FIBERED, rec_.flags.fibered);
    flag(F_SQP, rec_.flags.strongly_quasipositive);
    flag(F_QP, rec_.flags.quasipositive);
    flag(F_SLICE, rec_.flags.slice);
    flag(F_RSLICE, rec_.flags.rationally_slice);
    flag(F_ALT, rec_.flags.alternating);
    flag(F_LSPACE, rec_.flags.lspace_knot);
    flag(F_PSL, rec_.flags.positive_sl_transverse);
    w_.sigma = rec_.signature;
  }

  // Candidate-set primitives -------------------------------------------

  bool keep_if(int field, const std::function<bool(int)>& pred,
               const char* rule, const char* anchor) {
    auto& dom = w_.dom[field];
    std::set<int> next;
    for (int v : dom)
      if (pred(v)) next.insert(v);
    if (next.size() == dom.size()) return false;
    Derivation d{kFieldName[field], render(field, dom), render(field, next),
                 rule, anchor};
    dom = std::move(next);
    derivs_.push_back(std::move(d));
    changed_this_rule_ = true;
    if (dom.empty()) {
      alive_ = false;
      contras_.push_back(
          {rule, std::string("no candidates left for ") + kFieldName[field] +
                     " (" + anchor + ")"});
    }
    return true;
  }

  void restrict_to(int field, const std::set<int>& allowed, const char* rule,
                   const char* anchor) {
    keep_if(field, [&](int v) { return allowed.count(v) > 0; }, rule, anchor);
  }

  void arc(int fa, int fb, const std::function<bool(int, int)>& pred,
           const char* rule, const char* anchor) {
    keep_if(fa,
            [&](int a) {
              for (int b : w_.dom[fb])
                if (pred(a, b)) return true;
              return false;
            },
            rule, anchor);
    if (!alive_) return;
    keep_if(fb,
            [&](int b) {
              for (int a : w_.dom[fa])
                if (pred(a, b)) return true;
              return false;
            },
            rule, anchor);
  }

  bool all(int field, const std::function<bool(int)>& pred) const {
    for (int v : w_.dom[field])
      if (!pred(v)) return false;
    return !w_.dom[field].empty();
  }

  bool flag_true(int field) const { return w_.dom[field] == std::set<int>{1}; }
  bool flag_false(int field) const { return w_.dom[field] == std::set<int>{0}; }

  std::optional<int> single(int field) const {
    if (w_.dom[field].size() == 1) return *w_.dom[field].begin();
    return std::nullopt;
  }

  // Rules ---------------------------------------------------------------

  void apply_rule(int r) {
    switch (r) {
      case 1:
        keep_if(F_NU, [](int v) { return v == 0 || v % 2 != 0; }, "R1",
                "nu_sharp is zero or odd");
        break;
      case 2:
        arc(F_NU, F_R0,
            [](int nu, int r0) {
              return r0 >= std::abs(nu) && (r0 - nu) % 2 == 0;
            },
            "R2", "r0 >= |nu_sharp| with the parity of nu_sharp");
        break;
      case 3: rule_small_r0(); break;
      case 4: rule_lspace(); break;
      case 5:
        arc(F_NU, F_TAU,
            [](int nu, int tau) {
              return !(tau > 0 && nu <= 0) && !(tau < 0 && nu >= 0);
            },
            "R5", "tau_sharp > 0 forces nu_sharp > 0, and mirrored");
        break;
      case 6:
        arc(F_NU, F_TAU,
            [](int nu, int tau) { return std::abs(2 * tau - nu) <= 1; }, "R6",
            "epsilon_sharp = 2*tau_sharp - nu_sharp lies in {-1, 0, 1}");
        break;
      case 7:
        restrict_to(F_HP1, {-1, 0}, "R7", "h of +1-surgery is never positive");
        if (alive_ && all(F_NU, [](int v) { return v > 0; }))
          restrict_to(F_HP1, {-1}, "R7",
                      "nu_sharp > 0 makes h of +1-surgery negative");
        break;
      case 8: rule_shape(); break;
      case 9: rule_slice(); break;
      case 10:
      case 11:
        break;  // statement-only rules, evaluated at the fixpoint
      case 12: rule_attributes(); break;
      case 13:
        arc(F_NU, F_GS,
            [](int nu, int gs) {
              return gs == 0 ? nu == 0 : std::abs(nu) <= 2 * gs - 1;
            },
            "R13", "|nu_sharp| <= 2*slice_genus - 1, zero when slice");
        if (alive_)
          arc(F_GS, F_GENUS, [](int gs, int g) { return gs <= g; }, "R13",
              "slice genus is at most the Seifert genus");
        break;
      case 14: {
        auto nu = single(F_NU);
        auto r0 = single(F_R0);
        if (nu && r0 && *r0 - std::abs(*nu) == 2 && std::abs(*nu) <= 1)
          restrict_to(F_GENUS, {1}, "R14",
                      "r0 = |nu_sharp| + 2 with |nu_sharp| <= 1 forces genus 1");
        break;
      }
      case 15:
        restrict_to(F_HM1, {0, 1}, "R15",
                    "mirror symmetry: h of -1-surgery is never negative");
        if (alive_ && all(F_NU, [](int v) { return v < 0; }))
          restrict_to(F_HM1, {1}, "R15",
                      "nu_sharp < 0 makes h of -1-surgery positive");
        break;
      default:
        throw std::invalid_argument("unknown rule id");
    }
  }

  void rule_small_r0() {
    auto r0 = single(F_R0);
    if (!r0) return;
    if (*r0 == 0) {
      // unknot
      restrict_to(F_NU, {0}, "R3", "r0 = 0 holds only for the unknot");
      if (alive_) restrict_to(F_TAU, {0}, "R3", "r0 = 0 holds only for the unknot");
      if (alive_) restrict_to(F_GS, {0}, "R3", "r0 = 0 holds only for the unknot");
      if (alive_) restrict_to(F_SLICE, {1}, "R3", "r0 = 0 holds only for the unknot");
    } else if (*r0 == 1) {
      // trefoil (chirality given by the sign of nu_sharp)
      restrict_to(F_GENUS, {1}, "R3", "r0 = 1 holds only for the trefoils");
      if (alive_) restrict_to(F_GS, {1}, "R3", "r0 = 1 holds only for the trefoils");
      if (alive_)
        restrict_to(F_FIBERED, {1}, "R3", "r0 = 1 holds only for the trefoils");
      if (alive_)
        restrict_to(F_SLICE, {0}, "R3", "r0 = 1 holds only for the trefoils");
    } else if (*r0 == 2) {
      restrict_to(F_NU, {0}, "R3", "r0 = 2 holds only for the figure eight");
      if (alive_)
        restrict_to(F_SHAPE, {0}, "R3", "the figure eight is W-shaped");
      if (alive_)
        restrict_to(F_GENUS, {1}, "R3", "r0 = 2 holds only for the figure eight");
      if (alive_)
        restrict_to(F_GS, {1}, "R3", "r0 = 2 holds only for the figure eight");
      if (alive_)
        restrict_to(F_FIBERED, {1}, "R3",
                    "r0 = 2 holds only for the figure eight");
      if (alive_)
        restrict_to(F_SLICE, {0}, "R3", "the figure eight is not slice");
    }
  }

  void rule_lspace() {
    if (!flag_true(F_LSPACE)) return;
    restrict_to(F_FIBERED, {1}, "R4", "instanton L-space knots are fibered");
    if (alive_)
      restrict_to(F_SQP, {1}, "R4",
                  "instanton L-space knots are strongly quasipositive");
    if (alive_)
      arc(F_NU, F_GENUS, [](int nu, int g) { return nu == 2 * g - 1; }, "R4",
          "an instanton L-space knot has nu_sharp = 2*genus - 1");
    if (alive_)
      arc(F_R0, F_GENUS, [](int r0, int g) { return r0 == 2 * g - 1; }, "R4",
          "an instanton L-space knot has r0 = 2*genus - 1");
  }

  void rule_shape() {
    if (w_.shape_asserted)
      restrict_to(F_NU, {0}, "R8", "the shape is defined only when nu_sharp = 0");
    if (!alive_) return;
    if (w_.dom[F_SHAPE] == std::set<int>{1}) {
      restrict_to(F_HM1, {1}, "R8", "a V-shaped knot has h of -1-surgery positive");
      if (alive_)
        restrict_to(F_HP1, {-1}, "R8",
                    "a V-shaped knot has h of +1-surgery negative");
    }
  }

  void rule_slice() {
    if (flag_true(F_SLICE)) {
      restrict_to(F_RSLICE, {1}, "R9", "slice knots are rationally slice");
      if (alive_) restrict_to(F_GS, {0}, "R9", "slice knots have slice genus 0");
    }
    if (!alive_) return;
    if (single(F_GS) == 0)
      restrict_to(F_SLICE, {1}, "R9", "slice genus 0 means slice");
    if (!alive_) return;
    if (flag_false(F_SLICE))
      keep_if(F_GS, [](int v) { return v >= 1; }, "R9",
              "a non-slice knot has positive slice genus");
    if (!alive_) return;
    if (all(F_GS, [](int v) { return v >= 1; }))
      restrict_to(F_SLICE, {0}, "R9", "positive slice genus means not slice");
    if (!alive_) return;
    if (flag_true(F_RSLICE)) {
      restrict_to(F_NU, {0}, "R9", "rationally slice knots have nu_sharp = 0");
      if (alive_)
        restrict_to(F_TAU, {0}, "R9", "rationally slice knots have tau_sharp = 0");
      if (alive_)
        restrict_to(F_SHAPE, {0}, "R9", "rationally slice knots are W-shaped");
    }
    if (!alive_) return;
    if (all(F_NU, [](int v) { return v != 0; })) {
      restrict_to(F_RSLICE, {0}, "R9",
                  "nonzero nu_sharp rules out rational sliceness");
      if (alive_)
        restrict_to(F_SLICE, {0}, "R9", "nonzero nu_sharp rules out sliceness");
    }
  }

  void rule_attributes() {
    if (flag_true(F_SQP))
      restrict_to(F_QP, {1}, "R12",
                  "strongly quasipositive knots are quasipositive");
    if (!alive_) return;
    if (flag_true(F_PSL))
      keep_if(F_NU, [](int v) { return v >= 1; }, "R12",
              "positive self-linking transverse representatives force nu_sharp >= 1");
    if (!alive_) return;
    if (flag_true(F_QP) && flag_false(F_SLICE))
      arc(F_TAU, F_GS, [](int tau, int gs) { return gs >= 1 && tau == gs; },
          "R12", "a non-slice quasipositive knot has tau_sharp = slice genus");
    if (!alive_) return;
    if (flag_true(F_ALT) && w_.sigma) {
      int tau = -*w_.sigma / 2;
      restrict_to(F_TAU, {tau}, "R12",
                  "an alternating knot has tau_sharp = -signature/2");
    }
  }

  // Fixpoint-only consequences -----------------------------------------

  void emit_statements() {
    auto r0 = single(F_R0);
    if (r0 == 0) statements_.push_back("R3: the knot is the unknot");
    if (r0 == 1) statements_.push_back("R3: the knot is a trefoil");
    if (r0 == 2) statements_.push_back("R3: the knot is the figure eight");
    if (r0 == 3)
      statements_.push_back(
          "R3: conjecturally the knot is the (2,5) torus knot, 5_2, or a mirror");
    if (all(F_NU, [](int v) { return v > 0; }) ||
        all(F_TAU, [](int v) { return v > 0; }))
      statements_.push_back(
          "R10: the 1/n-surgeries (n >= 1) are linearly independent in the "
          "integer homology cobordism group");
    else if (all(F_NU, [](int v) { return v < 0; }) ||
             all(F_TAU, [](int v) { return v < 0; }))
      statements_.push_back(
          "R10: the mirror's 1/n-surgeries (n >= 1) are linearly independent "
          "in the integer homology cobordism group");
    auto nu = single(F_NU);
    if (nu && r0) {
      std::set<int> zero_dims = *nu != 0
                                    ? std::set<int>{*r0 + std::abs(*nu)}
                                    : std::set<int>{*r0, *r0 + 2};
      if (zero_dims.count(2))
        statements_.push_back(
            "R11: a dimension-2 zero-surgery is possible, so the knot is the "
            "unknot or a trefoil");
    }
  }

  InferenceResult harvest() {
    InferenceResult out;
    out.record = rec_;
    out.derivations = std::move(derivs_);
    out.contradictions = std::move(contras_);
    out.statements = std::move(statements_);
    if (!out.contradictions.empty()) return out;
    auto& r = out.record;
    auto setnum = [&](int f, std::optional<int>& field) {
      if (auto v = single(f)) field = *v;
    };
    setnum(F_NU, r.nu_sharp);
    setnum(F_R0, r.r0);
    setnum(F_TAU, r.tau_sharp);
    setnum(F_GENUS, r.genus);
    setnum(F_GS, r.slice_genus);
    if (auto s = single(F_SHAPE); s && single(F_NU) == 0)
      r.shape = *s == 0 ? Shape::W : Shape::V;
    r.froyshov_plus1 = dom_to_hsign(w_.dom[F_HP1]);
    r.froyshov_minus1 = dom_to_hsign(w_.dom[F_HM1]);
    auto setflag = [&](int f, std::optional<bool>& field) {
      if (auto v = single(f)) field = (*v == 1);
    };
    setflag(F_FIBERED, r.flags.fibered);
    setflag(F_SQP, r.flags.strongly_quasipositive);
    setflag(F_QP, r.flags.quasipositive);
    setflag(F_SLICE, r.flags.slice);
    setflag(F_RSLICE, r.flags.rationally_slice);
    setflag(F_ALT, r.flags.alternating);
    setflag(F_LSPACE, r.flags.lspace_knot);
    setflag(F_PSL, r.flags.positive_sl_transverse);
    return out;
  }
};

}  // namespace

InferenceResult apply_rules(const KnotRecord& rec, const InferenceOptions& opts) {
  auto structural = structural_violations(rec);
  if (!structural.empty()) {
    InferenceResult out;
    out.record = rec;
    for (const auto& v : structural) out.contradictions.push_back({"structural", v});
    return out;
  }
  std::vector<int> order = opts.rule_order;
  if (order.empty())
    for (int i = 1; i <= 15; ++i) order.push_back(i);
  for (int r : order)
    if (r < 1 || r > 15)
      throw std::invalid_argument("rule_order entries must lie in 1..15");
  Engine eng(rec, opts);
  return eng.run(order);
}

std::vector<Contradiction> check_consistency(const KnotRecord& rec,
                                             const InferenceOptions& opts) {
  return apply_rules(rec, opts).contradictions;
}

}  // namespace knotcalc
