#include "mcx/complex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mcx/error.hpp"

namespace mcx {
namespace {

void check_universe(int n) {
  if (n < 0 || n > kMaxUniverse)
    fail(ErrorKind::Budget, "complex universe of " + std::to_string(n) + " vertices exceeds the 64-vertex limit");
}

void over_budget(std::size_t budget) {
  fail(ErrorKind::Budget, "face budget of " + std::to_string(budget) + " faces exceeded");
}

const std::vector<FaceMask> kNoFaces;

}  // namespace

std::vector<int> face_vertices(FaceMask f) {
  std::vector<int> out;
  while (f) {
    out.push_back(std::countr_zero(f));
    f &= f - 1;
  }
  return out;
}

FaceMask face_mask(const std::vector<int>& vertices) {
  FaceMask f = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxUniverse) fail(ErrorKind::Contract, "vertex id out of range: " + std::to_string(v));
    f |= FaceMask{1} << v;
  }
  return f;
}

SimplicialComplex::SimplicialComplex() : universe_(0), total_(1), by_dim_{{FaceMask{0}}} {}

SimplicialComplex::SimplicialComplex(int universe, std::vector<FaceMask> faces, std::size_t budget)
    : universe_(universe) {
  check_universe(universe);
  const FaceMask allowed = universe == 64 ? ~FaceMask{0} : ((FaceMask{1} << universe) - 1);
  for (FaceMask f : faces) {
    if (f & ~allowed) fail(ErrorKind::Contract, "face uses a vertex outside the universe");
    const auto d = static_cast<std::size_t>(face_size(f));
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(f);
  }
  if (by_dim_.empty()) by_dim_.resize(1);
  total_ = 0;
  for (auto& v : by_dim_) {
    std::sort(v.begin(), v.end(), face_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    total_ += v.size();
  }
  if (total_ > budget) over_budget(budget);
  if (by_dim_[0].empty()) fail(ErrorKind::Contract, "a simplicial complex must contain the empty face");
  while (by_dim_.size() > 1 && by_dim_.back().empty()) by_dim_.pop_back();
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    if (by_dim_[d].empty()) fail(ErrorKind::Contract, "face family is not closed under subsets");
    for (FaceMask f : by_dim_[d])
      for (FaceMask r = f; r; r &= r - 1)
        if (!std::binary_search(by_dim_[d - 1].begin(), by_dim_[d - 1].end(), f & ~(r & (~r + 1)), face_lex_less))
          fail(ErrorKind::Contract, "face family is not closed under subsets");
  }
}

SimplicialComplex SimplicialComplex::from_facets(int universe, const std::vector<std::vector<int>>& facets,
                                                 std::size_t budget) {
  check_universe(universe);
  std::unordered_set<FaceMask> seen{0};
  for (const auto& facet : facets) {
    const FaceMask f = face_mask(facet);
    if (seen.count(f)) continue;
    // Enumerate all subsets of f.
    for (FaceMask s = f;; s = (s - 1) & f) {
      seen.insert(s);
      if (seen.size() > budget) over_budget(budget);
      if (s == 0) break;
    }
  }
  return SimplicialComplex(universe, std::vector<FaceMask>(seen.begin(), seen.end()), budget);
}

const std::vector<FaceMask>& SimplicialComplex::faces(int d) const {
  if (d < -1) fail(ErrorKind::Contract, "face dimension below -1");
  const auto i = static_cast<std::size_t>(d + 1);
  return i < by_dim_.size() ? by_dim_[i] : kNoFaces;
}

std::vector<FaceMask> SimplicialComplex::all_faces() const {
  std::vector<FaceMask> out;
  out.reserve(total_);
  for (const auto& v : by_dim_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& v : by_dim_) out.push_back(v.size());
  return out;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < by_dim_.size(); ++i) {
    const long long d = static_cast<long long>(i) - 1;
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[i].size());
  }
  return chi;
}

long SimplicialComplex::index_of(FaceMask f) const {
  const auto i = static_cast<std::size_t>(face_size(f));
  if (i >= by_dim_.size()) return -1;
  const auto& v = by_dim_[i];
  auto it = std::lower_bound(v.begin(), v.end(), f, face_lex_less);
  if (it == v.end() || *it != f) return -1;
  return static_cast<long>(it - v.begin());
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  for (std::size_t i = 0; i < by_dim_.size(); ++i) {
    std::unordered_set<FaceMask> covered;
    if (i + 1 < by_dim_.size())
      for (FaceMask g : by_dim_[i + 1])
        for (FaceMask r = g; r; r &= r - 1) covered.insert(g & ~(r & (~r + 1)));
    for (FaceMask f : by_dim_[i])
      if (!covered.count(f)) out.push_back(f);
  }
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (FaceMask f : faces(0)) out.push_back(std::countr_zero(f));
  return out;
}

SimplicialComplex independence_complex(const Graph& g, std::size_t budget) {
  const int n = g.n_vertices();
  check_universe(n);
  std::vector<FaceMask> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = FaceMask{1} << v;
    for (int w : g.neighbors(v)) closed[v] |= FaceMask{1} << w;
  }
  std::vector<FaceMask> out;
  // Depth-first in increasing vertex order yields lexicographic order.
  struct Frame {
    FaceMask face, cand;
  };
  std::vector<Frame> stack{{0, n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1}};
  while (!stack.empty()) {
    auto [face, cand] = stack.back();
    stack.pop_back();
    out.push_back(face);
    if (out.size() > budget) over_budget(budget);
    // Push children in reverse so the smallest vertex is expanded first.
    std::vector<int> vs = face_vertices(cand);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
      const int v = *it;
      const FaceMask higher = (v == 63) ? 0 : ~((FaceMask{2} << v) - 1);
      stack.push_back({face | (FaceMask{1} << v), cand & ~closed[v] & higher});
    }
  }
  return SimplicialComplex(n, std::move(out), budget);
}

SimplicialComplex matching_complex(const Graph& g, std::size_t budget) {
  return independence_complex(line_graph(g), budget);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t budget) {
  const int n = a.universe() + b.universe();
  check_universe(n);
  if (a.face_count() > budget / std::max<std::size_t>(b.face_count(), 1)) over_budget(budget);
  std::vector<FaceMask> out;
  out.reserve(a.face_count() * b.face_count());
  const auto fa = a.all_faces();
  const auto fb = b.all_faces();
  for (FaceMask x : fa)
    for (FaceMask y : fb) out.push_back(x | (y << a.universe()));
  return SimplicialComplex(n, std::move(out), budget);
}

SimplicialComplex cone(const SimplicialComplex& a, std::size_t budget) {
  return join(a, SimplicialComplex(1, {0, 1}), budget);
}

SimplicialComplex suspension(const SimplicialComplex& a, std::size_t budget) {
  return join(a, SimplicialComplex(2, {0, 1, 2}), budget);
}

SimplicialComplex complex_add_edge(const SimplicialComplex& mc, const Graph& g, Edge e, std::optional<int> position,
                                   std::size_t budget) {
  if (mc.universe() != g.n_edges()) fail(ErrorKind::Contract, "complex universe must match the edge count of g");
  if (e.first > e.second) std::swap(e.first, e.second);
  if (e.first == e.second) fail(ErrorKind::Contract, "new edge is a self-loop");
  if (e.second < g.n_vertices() && g.edge_index(e.first, e.second) >= 0)
    fail(ErrorKind::Contract, "edge already present");
  const int m = g.n_edges();
  const int pos = position.value_or(m);
  if (pos < 0 || pos > m) fail(ErrorKind::Contract, "insert position out of range");
  check_universe(m + 1);
  // Edges sharing an endpoint with e.
  FaceMask blocked = 0;
  for (int i = 0; i < m; ++i) {
    const auto& f = g.edges()[i];
    if (f.first == e.first || f.first == e.second || f.second == e.first || f.second == e.second)
      blocked |= FaceMask{1} << i;
  }
  const FaceMask low = (FaceMask{1} << pos) - 1;
  auto shift = [&](FaceMask f) { return (f & low) | ((f & ~low) << 1); };
  std::vector<FaceMask> out;
  for (FaceMask f : mc.all_faces()) {
    out.push_back(shift(f));
    if ((f & blocked) == 0) out.push_back(shift(f) | (FaceMask{1} << pos));
    if (out.size() > budget) over_budget(budget);
  }
  return SimplicialComplex(m + 1, std::move(out), budget);
}

SimplicialComplex complex_delete_edge(const SimplicialComplex& mc, int e) {
  if (e < 0 || e >= mc.universe()) fail(ErrorKind::Contract, "unknown vertex " + std::to_string(e));
  const FaceMask bit = FaceMask{1} << e;
  const FaceMask low = bit - 1;
  std::vector<FaceMask> out;
  for (FaceMask f : mc.all_faces())
    if (!(f & bit)) out.push_back((f & low) | ((f & ~low & ~bit) >> 1));
  return SimplicialComplex(mc.universe() - 1, std::move(out));
}

DiameterResult one_skeleton_diameter(const SimplicialComplex& a) {
  const auto verts = a.vertices();
  if (verts.empty()) fail(ErrorKind::Contract, "complex has no vertices");
  std::vector<std::vector<int>> adj(a.universe());
  for (FaceMask f : a.faces(1)) {
    const auto v = face_vertices(f);
    adj[v[0]].push_back(v[1]);
    adj[v[1]].push_back(v[0]);
  }
  DiameterResult res;
  for (int s : verts) {
    std::vector<int> dist(a.universe(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    for (int v : verts) {
      if (dist[v] < 0) return {false, 0};
      res.diameter = std::max(res.diameter, dist[v]);
    }
  }
  return res;
}

std::optional<std::vector<int>> disconnection_witness(const Graph& g) {
  const int m = g.n_edges();
  if (m < 2) fail(ErrorKind::Contract, "disconnection_witness needs at least two edges");
  // Components of the disjointness graph on edges (the 1-skeleton of M(g)).
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < m; ++w)
        if (comp[w] < 0 && !g.edges_incident(u, w)) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  if (ncomp == 1) return std::nullopt;
  // Components are numbered by their smallest edge. Walking them in that
  // order, adding a component lowers the sorted sequence exactly when the
  // current union already holds a larger element.
  std::vector<bool> take(ncomp, false);
  take[0] = true;
  int max_taken = 0;
  for (int e = 0; e < m; ++e)
    if (comp[e] == 0) max_taken = e;
  std::vector<int> min_of(ncomp, m);
  for (int e = m - 1; e >= 0; --e) min_of[comp[e]] = e;
  for (int c = 1; c < ncomp; ++c) {
    if (max_taken > min_of[c]) {
      take[c] = true;
      for (int e = 0; e < m; ++e)
        if (comp[e] == c) max_taken = std::max(max_taken, e);
    }
  }
  if (std::all_of(take.begin(), take.end(), [](bool b) { return b; })) take[ncomp - 1] = false;
  std::vector<int> out;
  for (int e = 0; e < m; ++e)
    if (take[comp[e]]) out.push_back(e);
  return out;
}

}  // namespace mcx
