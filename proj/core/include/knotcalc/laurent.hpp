#pragma once

#include <map>
#include <string>

namespace knotcalc {

/// Integer Laurent polynomial; zero coefficients are not stored.
struct LaurentPoly {
  std::map<int, long long> c;  // exponent -> coefficient

  long long coeff(int e) const;
  void set(int e, long long v);
  bool is_zero() const { return c.empty(); }

  /// p(t) == p(1/t)
  bool is_symmetric() const;

  long long eval_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly laurent(std::initializer_list<std::pair<int, long long>> terms);

/// Second derivative evaluated at t = 1: sum of c_e * e * (e - 1).
long long second_derivative_at_one(const LaurentPoly& p);

/// t -> t^2, the Alexander polynomial substitution for a (2, q)-cable.
LaurentPoly cable_substitute(const LaurentPoly& p);

/// Casson-type Euler characteristic -Delta''(1).  Requires a symmetric
/// polynomial (throws std::domain_error otherwise).
long long casson_chi(const LaurentPoly& delta);

/// a*t + (1 - 2a) + a*t^{-1}, the normalized genus-one Alexander form.
LaurentPoly genus1_alexander(long long a);

std::string to_string(const LaurentPoly& p);

}  // namespace knotcalc
