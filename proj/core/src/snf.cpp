#include <algorithm>
#include <limits>
#include <numeric>
#include <type_traits>

#include "mcx/error.hpp"
#include "mcx/homology.hpp"

namespace mcx {
namespace {

struct Overflow {};

// Checked arithmetic for the machine-word pass; BigInt never overflows.
inline long long mul_sub(long long a, long long q, long long b) {
  long long p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
template <class T>
T from_ll(long long v) {
  if constexpr (std::is_same_v<T, long long>)
    return v;
  else
    return T(static_cast<long>(v));
}
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }
inline const BigInt& to_big(const BigInt& v) { return v; }
inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
using Column = std::vector<std::pair<int, T>>;

// col_dst -= q * col_src, both sorted by row.
template <class T>
void axpy(Column<T>& dst, const Column<T>& src, const T& q, std::vector<int>& row_count,
          std::vector<std::vector<int>>& row_cols, int dst_index) {
  Column<T> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      T v = mul_sub(T(0), q, src[j].second);
      row_count[src[j].first]++;
      row_cols[src[j].first].push_back(dst_index);
      out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      T v = mul_sub(dst[i].second, q, src[j].second);
      if (v == 0)
        row_count[dst[i].first]--;
      else
        out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

template <class T>
struct UnitPass {
  std::size_t units = 0;
  std::vector<Column<T>> residual;
};

template <class T>
UnitPass<T> eliminate_units(int rows, std::vector<Column<T>> cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<int> row_count(rows, 0);
  std::vector<std::vector<int>> row_cols(rows);
  for (int c = 0; c < n; ++c)
    for (const auto& [r, v] : cols[c]) {
      row_count[r]++;
      row_cols[r].push_back(c);
    }
  std::vector<bool> alive(n, true);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  UnitPass<T> out;
  bool progress = true;
  while (progress) {
    progress = false;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
      if (!alive[c] || cols[c].empty()) continue;
      // Unit entry in the sparsest row.
      int best = -1;
      for (std::size_t k = 0; k < cols[c].size(); ++k)
        if (is_unit(cols[c][k].second) &&
            (best < 0 || row_count[cols[c][k].first] < row_count[cols[c][best].first]))
          best = static_cast<int>(k);
      if (best < 0) continue;
      const int r = cols[c][best].first;
      const T pivot = cols[c][best].second;
      alive[c] = false;
      for (const auto& [rr, v] : cols[c]) row_count[rr]--;
      std::vector<int> touching;
      touching.swap(row_cols[r]);
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      for (int c2 : touching) {
        if (!alive[c2]) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), r,
                                   [](const std::pair<int, T>& e, int row) { return e.first < row; });
        if (it == cols[c2].end() || it->first != r) continue;
        // pivot is a unit, so dividing by it is multiplying by it.
        const T q = it->second * pivot;
        axpy(cols[c2], cols[c], q, row_count, row_cols, c2);
      }
      Column<T>().swap(cols[c]);
      ++out.units;
      progress = true;
    }
  }
  for (int c = 0; c < n; ++c)
    if (alive[c] && !cols[c].empty()) out.residual.push_back(std::move(cols[c]));
  return out;
}

std::size_t count_nonzero_row(const std::vector<std::vector<BigInt>>& a, std::size_t i, std::size_t from) {
  std::size_t k = 0;
  for (std::size_t j = from; j < a[i].size(); ++j) k += (a[i][j] != 0);
  return k;
}

std::size_t count_nonzero_col(const std::vector<std::vector<BigInt>>& a, std::size_t j, std::size_t from) {
  std::size_t k = 0;
  for (std::size_t i = from; i < a.size(); ++i) k += (a[i][j] != 0);
  return k;
}

// Dense Smith normal form by elementary operations.
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> inv;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto place_smallest = [&](bool whole) -> bool {
      // Smallest magnitude nonzero; ties broken by fewest nonzeros in its row and column.
      std::size_t bi = m, bj = n, bcount = 0;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          BigInt mag = abs(a[i][j]);
          std::size_t cnt = count_nonzero_row(a, i, t) + count_nonzero_col(a, j, t);
          if (bi == m || mag < best || (mag == best && cnt < bcount)) {
            best = mag;
            bi = i;
            bj = j;
            bcount = cnt;
          }
        }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!place_smallest(true)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        place_smallest(false);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    inv.push_back(abs(a[t][t]));
  }
  return inv;
}

template <class T>
SmithResult snf_sparse(const SparseIntMatrix& m) {
  std::vector<Column<T>> cols(m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c])
      if (v != 0) cols[c].emplace_back(r, from_ll<T>(v));
  for (auto& c : cols) std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  UnitPass<T> pass = eliminate_units<T>(m.rows, std::move(cols));
  SmithResult res;
  res.invariants.assign(pass.units, BigInt(1));
  if (!pass.residual.empty()) {
    std::vector<int> rows;
    for (const auto& c : pass.residual)
      for (const auto& [r, v] : c) rows.push_back(r);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<std::vector<BigInt>> dense(rows.size(), std::vector<BigInt>(pass.residual.size(), 0));
    for (std::size_t c = 0; c < pass.residual.size(); ++c)
      for (const auto& [r, v] : pass.residual[c]) {
        const auto i = std::lower_bound(rows.begin(), rows.end(), r) - rows.begin();
        dense[i][c] = to_big(v);
      }
    for (auto& d : dense_snf(std::move(dense))) res.invariants.push_back(std::move(d));
  }
  return res;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
  SparseIntMatrix m;
  m.rows = static_cast<int>(dense.size());
  m.cols = m.rows ? static_cast<int>(dense[0].size()) : 0;
  m.columns.assign(m.cols, {});
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(dense[i].size()) != m.cols) fail(ErrorKind::Contract, "ragged dense matrix");
    for (int j = 0; j < m.cols; ++j)
      if (dense[i][j] != 0) m.columns[j].emplace_back(i, dense[i][j]);
  }
  return m;
}

std::vector<std::vector<long long>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<long long>> d(rows, std::vector<long long>(cols, 0));
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) d[r][c] += v;
  return d;
}

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return snf_sparse<long long>(m);
  } catch (const Overflow&) {
    return snf_sparse<BigInt>(m);
  }
}

SmithResult smith_normal_form(const std::vector<std::vector<BigInt>>& dense) {
  for (const auto& row : dense)
    if (!dense.empty() && row.size() != dense[0].size()) fail(ErrorKind::Contract, "ragged dense matrix");
  SmithResult r;
  r.invariants = dense_snf(dense);
  return r;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) fail(ErrorKind::Contract, "matrix shapes do not compose");
  SparseIntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.assign(b.cols, {});
  for (int c = 0; c < b.cols; ++c) {
    std::vector<long long> acc(a.rows, 0);
    for (const auto& [k, v] : b.columns[c])
      for (const auto& [r, w] : a.columns[k]) acc[r] += v * w;
    for (int r = 0; r < a.rows; ++r)
      if (acc[r] != 0) out.columns[c].emplace_back(r, acc[r]);
  }
  return out;
}

}  // namespace mcx
