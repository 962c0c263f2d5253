#include "knotcalc/parity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace knotcalc {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
    os << "\n";
  }
  return os.str();
}

void RatPoly::trim() {
  while (!coef.empty() && coef.back() == 0) coef.pop_back();
}

BigRat RatPoly::eval(const BigRat& t) const {
  BigRat r = 0;
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) r = r * t + *it;
  return r;
}

bool RatPoly::is_odd_function() const {
  for (size_t i = 0; i < coef.size(); i += 2)
    if (coef[i] != 0) return false;
  return true;
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  RatPoly out;
  out.coef.resize(std::max(coef.size(), rhs.coef.size()));
  for (size_t i = 0; i < out.coef.size(); ++i) {
    if (i < coef.size()) out.coef[i] += coef[i];
    if (i < rhs.coef.size()) out.coef[i] += rhs.coef[i];
  }
  out.trim();
  return out;
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  RatPoly out;
  out.coef.assign(coef.size() + rhs.coef.size() - 1, BigRat(0));
  for (size_t i = 0; i < coef.size(); ++i)
    for (size_t j = 0; j < rhs.coef.size(); ++j)
      out.coef[i + j] += coef[i] * rhs.coef[j];
  out.trim();
  return out;
}

RatPoly RatPoly::operator*(const BigRat& s) const {
  RatPoly out = *this;
  for (auto& c : out.coef) c *= s;
  out.trim();
  return out;
}

RatPoly interpolate(const std::vector<std::pair<BigRat, BigRat>>& points) {
  RatPoly result;
  for (size_t i = 0; i < points.size(); ++i) {
    RatPoly term;
    term.coef = {BigRat(1)};
    BigRat denom = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      RatPoly lin;
      lin.coef = {-points[j].first, BigRat(1)};
      term = term * lin;
      denom *= points[i].first - points[j].first;
    }
    result = result + term * (points[i].second / denom);
  }
  return result;
}

BigInt c_coeff(int n, int i, int h) {
  if (h < 1 || n < 1 || std::abs(i) > h)
    throw std::invalid_argument("c_coeff: need h >= 1, n >= 1, |i| <= h");
  if (n == 1) return ((h - i) % 2 != 0) ? 1 : 0;
  BigInt total = 0;
  for (int k = 1; h - i - 2 * k >= 0; ++k) total += binomial(h - i - 2 * k, n - 2);
  return total;
}

BigInt d_coeff(int j, int i, int h) {
  if (h < 1 || j < 0 || std::abs(i) > h)
    throw std::invalid_argument("d_coeff: need h >= 1, j >= 0, |i| <= h");
  if (j <= 1) return 0;  // the j = 0 sign row and the j = 1 row both cancel
  return c_coeff(j, -i, h) - c_coeff(j, i, h);
}

RatPoly p_poly(int j, int h) {
  if (h < 1 || j < 0 || j > 2 * h + 1)
    throw std::invalid_argument("p_poly: need h >= 1, 0 <= j <= 2h+1");
  if (j <= 1) return {};
  RatPoly cur;
  cur.coef = {BigRat(0), BigRat(1)};  // p_2 = t
  for (int jj = 3; jj <= j; ++jj) {
    // rhs(t) = p_{jj-1}(t) + (1/(jj-2)!) prod_{l=1}^{jj-2} ((h-l) - t)
    RatPoly rhs = cur;
    RatPoly prod;
    prod.coef = {BigRat(1)};
    BigRat fact = 1;
    for (int l = 1; l <= jj - 2; ++l) {
      RatPoly lin;
      lin.coef = {BigRat(h - l), BigRat(-1)};
      prod = prod * lin;
      fact *= l;
    }
    rhs = rhs + prod * (BigRat(1) / fact);
    // p_jj is the unique degree <= jj-1 polynomial with p(0) = 0 and
    // p(t+1) - p(t) = rhs(t); recover it from prefix sums of rhs.
    std::vector<std::pair<BigRat, BigRat>> pts;
    BigRat acc = 0;
    pts.push_back({BigRat(0), BigRat(0)});
    for (int t = 1; t <= jj - 1; ++t) {
      acc += rhs.eval(BigRat(t - 1));
      pts.push_back({BigRat(t), acc});
    }
    cur = interpolate(pts);
    // both sides of the difference equation have degree <= jj-2, so
    // agreement on the jj-1 interpolation points plus a few spares makes
    // it a polynomial identity
    for (int t = jj; t <= jj + 3; ++t)
      if (cur.eval(BigRat(t)) - cur.eval(BigRat(t - 1)) != rhs.eval(BigRat(t - 1)))
        throw std::logic_error("p_poly: difference recurrence failed");
  }
  if (!cur.is_odd_function()) throw std::logic_error("p_poly: not odd");
  int expected_max = std::max(j - 1, 0);
  if (cur.degree() > expected_max) throw std::logic_error("p_poly: degree too big");
  if (j >= 2 && j % 2 == 0 && cur.degree() != j - 1)
    throw std::logic_error("p_poly: even j must reach degree j-1");
  for (int i = 1; i <= h; ++i)
    if (cur.eval(BigRat(i)) != BigRat(d_coeff(j, i, h)))
      throw std::logic_error("p_poly: disagrees with d_coeff on integers");
  return cur;
}

static void check_index_set(const IndexSet& ix) {
  if (ix.h < 1) throw std::invalid_argument("index set: need h >= 1");
  if (ix.indices.empty()) throw std::invalid_argument("index set: empty");
  int prev = 0;
  for (int i : ix.indices) {
    if (i <= prev || i > ix.h)
      throw std::invalid_argument("index set: need 0 < i_1 < ... <= h");
    prev = i;
  }
}

IntMatrix build_N(const IndexSet& ix) {
  check_index_set(ix);
  int k = int(ix.indices.size());
  IntMatrix n(2 * k, k);
  for (int j = 0; j < 2 * k; ++j)
    for (int m = 0; m < k; ++m) n.at(j, m) = d_coeff(j, ix.indices[m], ix.h);
  return n;
}

IntMatrix build_M(const IndexSet& ix) {
  check_index_set(ix);
  int k = int(ix.indices.size());
  std::vector<int> cols;
  for (int m = k - 1; m >= 0; --m) cols.push_back(-ix.indices[m]);
  for (int m = 0; m < k; ++m) cols.push_back(ix.indices[m]);
  IntMatrix mm(2 * k, 2 * k);
  for (int c = 0; c < 2 * k; ++c) {
    mm.at(0, c) = (cols[c] % 2 == 0) ? 1 : -1;  // sign row (-1)^col
    for (int n = 1; n < 2 * k; ++n) mm.at(n, c) = c_coeff(n, cols[c], ix.h);
  }
  return mm;
}

namespace {

// Row echelon over the rationals; returns pivot columns.
std::vector<int> eliminate(std::vector<std::vector<BigRat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    BigRat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

std::vector<std::vector<BigRat>> to_rat(const IntMatrix& m) {
  std::vector<std::vector<BigRat>> out(m.rows, std::vector<BigRat>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i][j] = BigRat(m.at(i, j));
  return out;
}

std::vector<BigInt> make_primitive(const std::vector<BigRat>& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v)
    lcm_den = boost::multiprecision::lcm(lcm_den,
                                         BigInt(boost::multiprecision::denominator(x)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    BigRat scaled = x * BigRat(lcm_den);
    out.push_back(BigInt(boost::multiprecision::numerator(scaled)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

}  // namespace

int rank(const IntMatrix& m) {
  auto rat = to_rat(m);
  return int(eliminate(rat).size());
}

BigInt det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  int n = m.rows;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int sel = k + 1;
      while (sel < n && a.at(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sel, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::vector<std::vector<BigInt>> nullspace_int(const IntMatrix& m) {
  auto rat = to_rat(m);
  auto pivots = eliminate(rat);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRat> v(m.cols, BigRat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rat[r][free];
    basis.push_back(make_primitive(v));
  }
  return basis;
}

IndexSetReport verify_index_set(const IndexSet& ix) {
  IndexSetReport rep;
  rep.ix = ix;
  int k = int(ix.indices.size());
  IntMatrix n = build_N(ix);
  IntMatrix m = build_M(ix);
  rep.rank_n = rank(n);
  rep.rank_deficient = rep.rank_n <= k - 1;
  auto basis = nullspace_int(n);
  if (!basis.empty()) {
    rep.kernel = basis.front();
    // lift (x_1..x_k) to (x_k..x_1, -x_1..-x_k) over the columns of M
    rep.lifted.resize(2 * k);
    for (int t = 0; t < k; ++t) {
      rep.lifted[t] = rep.kernel[k - 1 - t];
      rep.lifted[k + t] = -rep.kernel[t];
    }
    rep.lifted_annihilated = true;
    for (int r = 0; r < 2 * k; ++r) {
      BigInt dot = 0;
      for (int c = 0; c < 2 * k; ++c) dot += m.at(r, c) * rep.lifted[c];
      if (dot != 0) rep.lifted_annihilated = false;
    }
  }
  rep.det_m_zero = det(m) == 0;
  rep.pass = rep.rank_deficient && !rep.kernel.empty() &&
             rep.lifted_annihilated && rep.det_m_zero;
  return rep;
}

IntMatrix pathcount_power(int h, int n) {
  if (h < 1 || n < 1) throw std::invalid_argument("pathcount_power: h, n >= 1");
  int size = 2 * h;
  IntMatrix a(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < i; ++j) a.at(i, j) = 1;
  IntMatrix result = IntMatrix::identity(size);
  for (int step = 1; step < n; ++step) result = result * a;
  return result;
}

bool hockey_stick(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("hockey_stick: m, k >= 0");
  BigInt total = 0;
  for (int l = 0; l <= m; ++l) total += binomial(l, k);
  return total == binomial(m + 1, k + 1);
}

std::vector<BigInt> v_coeffs(int h, int n) {
  if (h < 1 || n < 1 || n > 2 * h + 1)
    throw std::invalid_argument("v_coeffs: need h >= 1, 1 <= n <= 2h+1");
  std::vector<BigInt> out;
  for (int i = -h; i <= h; ++i) out.push_back(binomial(h - i, n - 1));
  return out;
}

SweepResult parity_sweep(int h_max, int k_max, int jobs) {
  if (h_max < 1 || k_max < 1 || jobs < 1)
    throw std::invalid_argument("parity_sweep: positive arguments required");
  std::vector<IndexSet> tasks;
  for (int h = 1; h <= h_max; ++h) {
    // enumerate subsets of {1..h} of size <= k_max in lexicographic order
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
      if (!cur.empty()) tasks.push_back({h, cur});
      if (int(cur.size()) == k_max) return;
      for (int i = next; i <= h; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(1);
  }
  SweepResult res;
  res.sets_checked = (long long)tasks.size();
  std::vector<std::vector<IndexSetReport>> fails(jobs);
  auto worker = [&](int id) {
    for (size_t t = id; t < tasks.size(); t += jobs) {
      IndexSetReport rep = verify_index_set(tasks[t]);
      if (!rep.pass) fails[id].push_back(std::move(rep));
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }
  for (auto& chunk : fails)
    for (auto& rep : chunk) res.failures.push_back(std::move(rep));
  std::sort(res.failures.begin(), res.failures.end(),
            [](const IndexSetReport& a, const IndexSetReport& b) {
              return std::tie(a.ix.h, a.ix.indices) < std::tie(b.ix.h, b.ix.indices);
            });
  return res;
}

}  // namespace knotcalc
