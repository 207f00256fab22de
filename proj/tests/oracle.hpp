#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library's complex or homology code, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

// All matchings of g as edge-index masks (subset enumeration, <= 24 edges).
inline std::vector<Mask> matchings(const mcx::Graph& g) {
  const int m = g.n_edges();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    std::vector<int> used(g.n_vertices(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      if (s >> e & 1) {
        auto [u, v] = g.edges()[e];
        ok = !used[u]++ && !used[v]++;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> independent_sets(const mcx::Graph& g) {
  const int n = g.n_vertices();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if ((s >> u & 1) && (s >> v & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

// Rank over Q by fraction-free Gaussian elimination.
inline std::size_t rank_q(std::vector<std::vector<mcx::BigInt>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  mcx::BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] /= prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Reduced Betti numbers over Q of the complex given as a list of faces
// (masks, closed under subsets, including 0).
inline std::map<int, std::size_t> betti_q(const std::vector<Mask>& faces) {
  std::map<int, std::vector<Mask>> by_dim;
  for (Mask f : faces) by_dim[std::popcount(f) - 1].push_back(f);
  for (auto& [d, v] : by_dim) std::sort(v.begin(), v.end());
  auto rank_of = [&](int d) -> std::size_t {  // rank of boundary from d to d-1
    if (!by_dim.count(d) || !by_dim.count(d - 1)) return 0;
    const auto& hi = by_dim[d];
    const auto& lo = by_dim[d - 1];
    std::vector<std::vector<mcx::BigInt>> m(lo.size(), std::vector<mcx::BigInt>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int sign = 1;
      for (int v = 0; v < 64; ++v)
        if (hi[j] >> v & 1) {
          Mask sub = hi[j] & ~(Mask{1} << v);
          auto it = std::lower_bound(lo.begin(), lo.end(), sub);
          m[it - lo.begin()][j] = sign;
          sign = -sign;
        }
    }
    return rank_q(std::move(m));
  };
  std::map<int, std::size_t> out;
  const int top = by_dim.rbegin()->first;
  std::vector<std::size_t> ranks(top + 2, 0);
  for (int d = 0; d <= top; ++d) ranks[d] = rank_of(d);
  for (int d = 0; d <= top; ++d) {
    const std::size_t b = by_dim[d].size() - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
    if (b) out[d] = b;
  }
  return out;
}

// Invariant factors from determinantal divisors; exponential, small matrices only.
inline std::vector<mcx::BigInt> invariant_factors(const std::vector<std::vector<long long>>& a) {
  const int m = static_cast<int>(a.size()), n = m ? static_cast<int>(a[0].size()) : 0;
  auto det = [&](const std::vector<int>& r, const std::vector<int>& c) {
    const int k = static_cast<int>(r.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    mcx::BigInt total = 0;
    do {
      mcx::BigInt p = 1;
      for (int i = 0; i < k; ++i) p *= static_cast<long>(a[r[i]][c[perm[i]]]);
      int inv = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
      total += (inv % 2 ? -p : p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  };
  auto subsets = [](int n, int k) {
    std::vector<std::vector<int>> out;
    for (unsigned s = 0; s < (1u << n); ++s)
      if (std::popcount(s) == k) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
          if (s >> i & 1) v.push_back(i);
        out.push_back(v);
      }
    return out;
  };
  std::vector<mcx::BigInt> divisors{1};
  for (int k = 1; k <= std::min(m, n); ++k) {
    mcx::BigInt g = 0;
    for (const auto& r : subsets(m, k))
      for (const auto& c : subsets(n, k)) {
        mcx::BigInt d = det(r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mcx::BigInt> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

// Random simple graph with the given vertex and edge counts.
inline mcx::Graph random_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<mcx::Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(m, all.size()));
  std::sort(all.begin(), all.end());
  return mcx::Graph(n, all);
}

// Random tree on n vertices (random parent for each vertex).
inline mcx::Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<mcx::Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::sort(e.begin(), e.end());
  return mcx::Graph(n, e);
}

}  // namespace oracle
