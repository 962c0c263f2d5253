#include "knotcalc/concordance.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotcalc {

static std::string mirror_name(const std::string& name) {
  if (name.empty()) return name;
  const std::string prefix = "mirror(";
  if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
      name.back() == ')')
    return name.substr(prefix.size(), name.size() - prefix.size() - 1);
  return prefix + name + ")";
}

KnotRecord mirror(const KnotRecord& rec) {
  KnotRecord m = rec;
  m.name = mirror_name(rec.name);
  if (rec.nu_sharp) m.nu_sharp = -*rec.nu_sharp;
  if (rec.tau_sharp) m.tau_sharp = -*rec.tau_sharp;
  if (rec.signature) m.signature = -*rec.signature;
  m.froyshov_plus1 = negate(rec.froyshov_minus1);
  m.froyshov_minus1 = negate(rec.froyshov_plus1);
  // Chirality-sensitive attributes do not transfer to the mirror.
  m.flags.strongly_quasipositive.reset();
  m.flags.quasipositive.reset();
  m.flags.lspace_knot.reset();
  m.flags.positive_sl_transverse.reset();
  return m;
}

static bool zero_or_odd(int v) { return v == 0 || v % 2 != 0; }

std::set<int> nu_of_sum(int nuK, int nuL) {
  if (!zero_or_odd(nuK) || !zero_or_odd(nuL))
    throw std::invalid_argument("nu_of_sum arguments must be zero or odd");
  if (nuK == 0) return {nuL};
  if (nuL == 0) return {nuK};
  std::set<int> out;
  int s = nuK + nuL;
  for (int v : {s - 1, s, s + 1})
    if (zero_or_odd(v)) out.insert(v);
  return out;
}

EpsilonValue epsilon(const KnotRecord& rec) {
  if (!rec.tau_sharp || !rec.nu_sharp) return {};
  int e = 2 * *rec.tau_sharp - *rec.nu_sharp;
  if (std::abs(e) > 1)
    throw std::domain_error("inconsistent record: |2*tau_sharp - nu_sharp| > 1");
  return {e};
}

EpsilonValue epsilon_of_sum(EpsilonValue a, EpsilonValue b) {
  if (a.value == 0) return b;
  if (b.value == 0) return a;
  if (a.value && b.value && *a.value == *b.value) return a;
  return {};
}

Shape shape_of_sum(Shape a, Shape b) { return a == b ? Shape::W : Shape::V; }

int tau_from_doubling(int nuK, int nuKK) {
  if ((nuKK - nuK) % 2 != 0)
    throw std::invalid_argument("tau_from_doubling: nu(K#K) - nu(K) must be even");
  return (nuKK - nuK) / 2;
}

std::string to_string(Order o) {
  switch (o) {
    case Order::greater: return "greater";
    case Order::less: return "less";
    case Order::equivalent: return "equivalent";
    case Order::undetermined: return "undetermined";
  }
  return "undetermined";
}

Order compare(const KnotRecord& a, const KnotRecord& b) {
  EpsilonValue ea = epsilon(a);
  EpsilonValue eb = epsilon(b);
  // epsilon of a # mirror(b); epsilon(mirror) = -epsilon.
  EpsilonValue e = epsilon_of_sum(ea, {eb.value ? std::optional<int>(-*eb.value)
                                                : std::nullopt});
  if (!e.value) return Order::undetermined;
  if (*e.value > 0) return Order::greater;
  if (*e.value < 0) return Order::less;
  return Order::equivalent;
}

SumInvariants sum_invariants(const SumExpr& expr) {
  SumInvariants out;
  if (expr.summands.empty()) {
    // empty sum is the unknot
    out.nu_candidates = {0};
    out.tau_sharp = 0;
    out.eps = {0};
    out.shape = Shape::W;
    return out;
  }
  bool nu_known = true, tau_known = true, shape_known = true, all_nu_zero = true;
  bool first = true;
  int tau_total = 0;
  std::optional<Shape> shape_acc;
  EpsilonValue eps_acc{0};
  std::set<int> nu_acc;
  for (const auto& [rec, mirrored] : expr.summands) {
    KnotRecord k = mirrored ? mirror(rec) : rec;
    if (!k.nu_sharp) nu_known = false;
    if (k.nu_sharp && *k.nu_sharp != 0) all_nu_zero = false;
    if (k.tau_sharp)
      tau_total += *k.tau_sharp;
    else
      tau_known = false;
    eps_acc = epsilon_of_sum(eps_acc, epsilon(k));
    if (k.shape)
      shape_acc = shape_acc ? shape_of_sum(*shape_acc, *k.shape) : *k.shape;
    else
      shape_known = false;
    if (nu_known) {
      if (first) {
        nu_acc = {*k.nu_sharp};
      } else {
        std::set<int> next;
        for (int v : nu_acc)
          for (int w : nu_of_sum(v, *k.nu_sharp)) next.insert(w);
        nu_acc = next;
      }
    }
    first = false;
  }
  if (nu_known && !expr.summands.empty()) out.nu_candidates = nu_acc;
  if (tau_known && !expr.summands.empty()) out.tau_sharp = tau_total;
  out.eps = eps_acc;
  if (shape_known && all_nu_zero && !expr.summands.empty()) out.shape = shape_acc;
  return out;
}

}  // namespace knotcalc
