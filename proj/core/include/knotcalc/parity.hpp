#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace knotcalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) with the convention that it vanishes for n < 0, k < 0 or n < k.
BigInt binomial(long long n, long long k);

/// Dense row-major matrix over the integers.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  BigInt& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Polynomial over the rationals, coefficients[i] multiplying t^i.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
struct RatPoly {
  std::vector<BigRat> coef;

  void trim();
  int degree() const { return int(coef.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coef.empty(); }
  BigRat eval(const BigRat& t) const;
  bool is_odd_function() const;

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const BigRat& s) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
};

/// Interpolating polynomial of degree < points.size() through (t_i, y_i).
RatPoly interpolate(const std::vector<std::pair<BigRat, BigRat>>& points);

/// Differential coefficient c_{n,i}: contribution of generator index i to
/// the n-th component of the differential, for a fixed parameter h >= 1.
/// n = 1: one when i and h have opposite parity, zero otherwise.
/// n >= 2: sum over k >= 1 of C((h - i) - 2k, n - 2).  Requires |i| <= h.
BigInt c_coeff(int n, int i, int h);

/// d_{j,i} = c_{j,-i} - c_{j,i} with the j = 0 row read off the sign
/// convention c_{0,j} = (-1)^j, so d_0 = d_1 = 0 identically and
/// d_{2,i} = i.  Defined for -h <= i <= h (antisymmetric in i).
BigInt d_coeff(int j, int i, int h);

/// The unique odd-at-zero polynomial family attached to h: p_0 = p_1 = 0,
/// p_2(t) = t, and for j >= 3
///   p_j(t+1) - p_j(t) = p_{j-1}(t) + (1/(j-2)!) * prod_{l=1}^{j-2} ((h-l) - t)
/// with p_j(0) = 0.  Postconditions checked internally: p_j is an odd
/// function, deg p_j <= max(j-1, 0) with equality for even j >= 2, and
/// p_j(i) = d_coeff(j, i, h) for 1 <= i <= h.
RatPoly p_poly(int j, int h);

/// A set of distinct generator indices 0 < i_1 < ... < i_k <= h.
struct IndexSet {
  int h;
  std::vector<int> indices;  // strictly increasing, in [1, h]
};

/// 2k x k matrix with rows d_coeff(j, i_m, h) for j = 0 .. 2k-1.
IntMatrix build_N(const IndexSet& ix);

/// 2k x 2k matrix with rows j = 0 .. 2k-1 over the ordered column indices
/// (-i_k, ..., -i_1, i_1, ..., i_k).  Row 0 carries the sign convention
/// (-1)^col; rows n >= 1 carry c_coeff(n, col, h).
IntMatrix build_M(const IndexSet& ix);

int rank(const IntMatrix& m);
BigInt det(const IntMatrix& m);  // requires square

/// Basis of the integer nullspace: exact rational elimination, each basis
/// vector scaled primitive with positive leading entry.
std::vector<std::vector<BigInt>> nullspace_int(const IntMatrix& m);

struct IndexSetReport {
  IndexSet ix;
  int rank_n = 0;
  std::vector<BigInt> kernel;         // primitive kernel vector of N
  std::vector<BigInt> lifted;         // (x_k..x_1, -x_1..-x_k)
  bool rank_deficient = false;        // rank N <= k - 1
  bool lifted_annihilated = false;    // M * lifted = 0
  bool det_m_zero = false;
  bool pass = false;
};

/// Full certificate for one index set: N is rank-deficient, its kernel
/// lifts to an antisymmetric vector annihilated by M, and det M = 0.
IndexSetReport verify_index_set(const IndexSet& ix);

/// (n-1)-th power of the strictly lower triangular all-ones 2h x 2h matrix.
/// For n >= 2 its (i, j) entry (1-based) is C(i - j - 1, n - 2); n = 1
/// gives the identity.
IntMatrix pathcount_power(int h, int n);

/// Sum_{l=0}^{m} C(l, k) == C(m+1, k+1).
bool hockey_stick(int m, int k);

/// Coefficients C(h - i, n - 1) for i = -h .. h (index 0 holds i = -h).
/// Entries vanish for i > h - (n - 1); requires 1 <= n <= 2h + 1.
std::vector<BigInt> v_coeffs(int h, int n);

struct SweepResult {
  long long sets_checked = 0;
  std::vector<IndexSetReport> failures;
  bool pass() const { return failures.empty(); }
};

/// verify_index_set over every index set with k <= k_max indices inside
/// [1, h] for every h <= h_max.  jobs > 1 splits the work across threads;
/// the result is deterministic regardless of jobs.
SweepResult parity_sweep(int h_max, int k_max, int jobs = 1);

std::string to_string(const IntMatrix& m);

}  // namespace knotcalc
