#include "mcx/formulas.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mcx/error.hpp"

namespace mcx {
namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<BigInt> legs_to_t(const std::vector<int>& legs) {
  std::vector<BigInt> t;
  for (int m : legs) t.emplace_back(m - 1);
  return t;
}

// Counts of the sum over A_x^n for every x at once, indexed by x.
template <class C, class Mark>
std::vector<C> marked_sums(int n, const C& one, Mark mark) {
  // dp[i][x]: sums over the first i positions with x marks.
  std::vector<std::vector<C>> dp(n + 1, std::vector<C>(n + 1));
  dp[0][0] = one;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x <= i; ++x) {
      if (dp[i][x] == C()) continue;
      dp[i + 1][x + 1] += mark(i + 1, dp[i][x]);
      if (i + 2 <= n) dp[i + 2][x] += dp[i][x];
    }
  return dp[n];
}

template <class C>
using Dist = std::map<int, C>;

template <class C>
Dist<C> shift(const Dist<C>& d) {
  Dist<C> out;
  for (const auto& [k, v] : d) out.emplace(k + 1, v);
  return out;
}

template <class C>
void accumulate(Dist<C>& into, const Dist<C>& d) {
  for (const auto& [k, v] : d) {
    into[k] += v;
    if (into[k] == C()) into.erase(k);
  }
}

// Sphere-count recursion along the spine for legs[0] >= 1.
template <class C, class Mark>
Dist<C> caterpillar_recursion(const std::vector<int>& legs, const C& one, Mark mark) {
  const int n = static_cast<int>(legs.size());
  std::vector<Dist<C>> a(n + 1);
  a[0][-1] = one;
  a[1][0] = mark(1, one);
  if (a[1][0] == C()) a[1].clear();
  for (int j = 2; j <= n; ++j) {
    Dist<C> cur;
    if (legs[j - 1] >= 1) {
      for (const auto& [k, v] : a[j - 1]) {
        C c = mark(j, v);
        if (!(c == C())) cur[k + 1] += c;
      }
      accumulate(cur, shift(a[j - 2]));
    } else if (legs[j - 2] >= 1) {
      cur = a[j - 1];
      accumulate(cur, shift(a[j - 2]));
    } else {
      cur = shift(a[j - 3]);
    }
    a[j] = std::move(cur);
  }
  return a[n];
}

void check_legs(const std::vector<int>& legs) {
  if (legs.empty()) fail(ErrorKind::InvalidSpec, "caterpillar needs at least one spine vertex");
  for (int m : legs)
    if (m < 0) fail(ErrorKind::InvalidSpec, "leg counts must be nonnegative");
}

}  // namespace

WedgeDescriptor path_cycle_homotopy(int n, bool is_cycle) {
  if (!is_cycle && n < 2) fail(ErrorKind::InvalidSpec, "path needs n >= 2");
  if (is_cycle && n < 3) fail(ErrorKind::InvalidSpec, "cycle needs n >= 3");
  const int dim = ceil_div(n - 4, 3);
  if (is_cycle) return WedgeDescriptor::sphere(dim, n % 3 == 0 ? 2 : 1);
  if (n % 3 == 2) return WedgeDescriptor::contractible();
  return WedgeDescriptor::sphere(dim);
}

WedgeDescriptor one_child_tree_homotopy(int i) {
  if (i < 1) fail(ErrorKind::InvalidSpec, "one-child tree needs i >= 1");
  return WedgeDescriptor::sphere((i - 1) / 2);
}

std::vector<std::vector<int>> enumerate_A(int n, int x) {
  if (x < 0 || x > n) fail(ErrorKind::InvalidSpec, "enumerate_A needs 0 <= x <= n");
  std::vector<std::vector<int>> out;
  if ((n - x) % 2 != 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int pos) {
    if (static_cast<int>(cur.size()) == x) {
      if ((n - pos + 1) % 2 == 0) out.push_back(cur);
      return;
    }
    // Next mark at pos + 2j, leaving an even gap before it.
    for (int p = pos; p <= n; p += 2) {
      cur.push_back(p);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

BigInt a_count(int n, int x) {
  if (x < 0 || x > n) fail(ErrorKind::InvalidSpec, "a_count needs 0 <= x <= n");
  if ((n - x) % 2 != 0) return 0;
  return binomial((n + x) / 2, (n - x) / 2);
}

MultilinearPoly M_poly(int n, int x) {
  if (n < 0 || x < 0 || x > n) fail(ErrorKind::InvalidSpec, "M_poly needs 0 <= x <= n");
  auto sums = marked_sums<MultilinearPoly>(n, MultilinearPoly::constant(1),
                                           [](int i, const MultilinearPoly& p) { return p.times_variable(i); });
  return sums[x];
}

BigInt M_eval(int n, int x, const std::vector<BigInt>& t) {
  if (static_cast<int>(t.size()) != n) fail(ErrorKind::Contract, "M_eval needs exactly n values");
  if (x < 0 || x > n) fail(ErrorKind::InvalidSpec, "M_eval needs 0 <= x <= n");
  auto sums = marked_sums<BigInt>(n, BigInt(1), [&](int i, const BigInt& v) -> BigInt { return v * t[i - 1]; });
  return sums[x];
}

SymbolicWedge general_caterpillar_symbolic(int n) {
  if (n < 1) fail(ErrorKind::InvalidSpec, "caterpillar needs at least one spine vertex");
  SymbolicWedge out;
  const int k = n / 2;
  for (int l = 0; l <= k; ++l) {
    if (n % 2 == 0) {
      if (auto p = M_poly(n, 2 * l); !p.is_zero()) out[k - 1 + l] = p;
    } else if (2 * l + 1 <= n) {
      if (auto p = M_poly(n, 2 * l + 1); !p.is_zero()) out[k + l] = p;
    }
  }
  return out;
}

WedgeDescriptor general_caterpillar_wedge(const std::vector<int>& legs) {
  check_legs(legs);
  for (int m : legs)
    if (m < 1) fail(ErrorKind::InvalidSpec, "every spine vertex needs at least one leg");
  const int n = static_cast<int>(legs.size());
  const auto t = legs_to_t(legs);
  const auto sums = marked_sums<BigInt>(n, BigInt(1), [&](int i, const BigInt& v) -> BigInt { return v * t[i - 1]; });
  WedgeDescriptor w;
  const int k = n / 2;
  for (int l = 0; l <= k; ++l) {
    if (n % 2 == 0)
      w.add(k - 1 + l, sums[2 * l]);
    else if (2 * l + 1 <= n)
      w.add(k + l, sums[2 * l + 1]);
  }
  return w;
}

WedgeDescriptor perfect_caterpillar_wedge(int m, int n) {
  if (m < 2) fail(ErrorKind::InvalidSpec, "perfect caterpillar needs m >= 2");
  if (n < 1) fail(ErrorKind::InvalidSpec, "perfect caterpillar needs n >= 1");
  const BigInt base = m - 1;
  const int k = n / 2;
  WedgeDescriptor w;
  for (int l = 0; l <= k; ++l) {
    if (n % 2 == 0)
      w.add(k - 1 + l, binomial(k + l, k - l) * pow_big(base, 2 * l));
    else
      w.add(k + l, binomial(k + l + 1, k - l) * pow_big(base, 2 * l + 1));
  }
  return w;
}

std::vector<int> normalize_caterpillar_legs(const std::vector<int>& legs) {
  check_legs(legs);
  std::vector<int> cur = legs;
  while (cur[0] == 0) {
    if (cur.size() == 1) fail(ErrorKind::InvalidSpec, "a single spine vertex without legs has no edges");
    if (cur.back() >= 1) {
      std::reverse(cur.begin(), cur.end());
      break;
    }
    // The first spine vertex is then just a leg of the second.
    std::vector<int> next{cur[1] + 1};
    next.insert(next.end(), cur.begin() + 2, cur.end());
    cur = std::move(next);
  }
  return cur;
}

SymbolicWedge arbitrary_caterpillar_symbolic(const std::vector<int>& legs) {
  check_legs(legs);
  if (legs[0] < 1) fail(ErrorKind::InvalidSpec, "symbolic form needs legs at the first spine vertex");
  return caterpillar_recursion<MultilinearPoly>(legs, MultilinearPoly::constant(1),
                                                [](int i, const MultilinearPoly& p) { return p.times_variable(i); });
}

WedgeDescriptor arbitrary_caterpillar_wedge(const std::vector<int>& legs) {
  const auto norm = normalize_caterpillar_legs(legs);
  const auto t = legs_to_t(norm);
  const auto d = caterpillar_recursion<BigInt>(norm, BigInt(1), [&](int i, const BigInt& v) -> BigInt { return v * t[i - 1]; });
  WedgeDescriptor w;
  for (const auto& [dim, c] : d) w.add(dim, c);
  return w;
}

MultilinearPoly L_poly(int k) {
  if (k < 0 || k > 30) fail(ErrorKind::InvalidSpec, "L_poly needs 0 <= k <= 30");
  MultilinearPoly out;
  for (unsigned long s = 1; s < (1UL << k); ++s) {
    Monomial m;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) m.push_back(i + 1);
    BigInt c = 1;
    for (std::size_t j = 1; j < m.size(); ++j) c *= m[j] - m[j - 1];
    out += MultilinearPoly::monomial(m, c);
  }
  return out;
}

WedgeDescriptor alternating_caterpillar_wedge(const std::vector<int>& a) {
  if (a.empty()) fail(ErrorKind::InvalidSpec, "alternating caterpillar needs k >= 1");
  for (int v : a)
    if (v < 0) fail(ErrorKind::InvalidSpec, "a_i = m_i - 1 must be nonnegative");
  const int k = static_cast<int>(a.size());
  // f[j]: sum of the terms whose largest index is j.
  std::vector<BigInt> f(k);
  BigInt total = 0;
  for (int j = 0; j < k; ++j) {
    BigInt inner = 1;
    for (int i = 0; i < j; ++i) inner += f[i] * (j - i);
    f[j] = inner * a[j];
    total += f[j];
  }
  return WedgeDescriptor::sphere(k - 1, total);
}

WedgeDescriptor evaluate(const SymbolicWedge& w, const std::vector<BigInt>& t) {
  WedgeDescriptor out;
  for (const auto& [d, p] : w) out.add(d, p.evaluate(t));
  return out;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool BoundsResult::allows(int d) const {
  if (d < d_min) return false;
  if (d_max_exact) return static_cast<long long>(d) * d_max_exact->den < d_max_exact->num;
  return d <= d_max;
}

BoundsResult polygon_line_bounds(int n, int t) {
  if (n <= 2 || t <= 1) fail(ErrorKind::InvalidSpec, "polygon-line bounds need n > 2 and t > 1");
  BoundsResult b;
  switch (n % 3) {
    case 0:
      b.d_min = 2 * n * t / 3 - t;
      b.d_max = 2 * n * t / 3 - t / 2 - 1;
      break;
    case 1:
      b.d_min = b.d_max = (2 * n * t + t) / 3 - t;
      b.exact = WedgeDescriptor::sphere(b.d_min, t);
      break;
    default:
      b.d_min = (2 * n * t - t) / 3 - (t + 1) / 2;
      b.d_max = (2 * n * t - t) / 3 - 1;
      break;
  }
  b.connectivity = b.d_min - 1;
  return b;
}

BoundsResult honeycomb21_bounds(int t) {
  if (t < 1) fail(ErrorKind::InvalidSpec, "honeycomb bounds need t >= 1");
  BoundsResult b;
  b.d_min = 2 * t;
  const long long num = 7LL * t + 3, g = std::gcd(num, 3LL);
  b.d_max_exact = Rational{num / g, 3 / g};
  b.d_max = static_cast<int>((num + 2) / 3) - 1;
  b.connectivity = 2 * t - 1;
  return b;
}

int honeycomb_connectivity_bound(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1) fail(ErrorKind::InvalidSpec, "honeycomb needs r, s, t >= 1");
  return t * ceil_div(r + s - 1, 2) + ceil_div(std::max(r, s) * std::min(r, s), 2) - 2;
}

long long binary_tree_connectivity_bound(int h) {
  if (h < 3 || h > 60) fail(ErrorKind::InvalidSpec, "binary tree bound needs 3 <= h <= 60");
  const int L = ceil_div(h, 3) - 1;
  long long sum = 0;
  for (int i = 0; i <= L; ++i) sum += 1LL << (h - 3 * i - 1);
  return sum - 2;
}

}  // namespace mcx
