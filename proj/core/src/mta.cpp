#include "mcx/mta.hpp"

#include <algorithm>

#include "mcx/error.hpp"

namespace mcx {
namespace {

std::vector<VertexSet> neighbor_sets(const Graph& g) {
  const int n = g.n_vertices();
  std::vector<VertexSet> out(n, VertexSet(n));
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) out[v].set(w);
  return out;
}

struct Stepper {
  const Graph& g;
  std::vector<VertexSet> nbr;

  explicit Stepper(const Graph& graph) : g(graph), nbr(neighbor_sets(graph)) {}

  std::vector<int> remaining(const VertexSet& ab) const {
    std::vector<int> r;
    for (int v = 0; v < g.n_vertices(); ++v)
      if (!ab.test(v)) r.push_back(v);
    return r;
  }

  int free_vertex(const VertexSet& ab, const std::vector<int>& rem) const {
    for (int v : rem)
      if (nbr[v].is_subset_of(ab)) return v;
    return -1;
  }

  // All (pivot, matching vertex) pairs, pivots ascending.
  std::vector<std::pair<int, int>> pivots(const VertexSet& ab, const std::vector<int>& rem, bool first_only) const {
    std::vector<std::pair<int, int>> out;
    for (int v : rem) {
      int w = -1, count = 0;
      for (int u : g.neighbors(v))
        if (!ab.test(u)) {
          w = u;
          if (++count > 1) break;
        }
      if (count == 1) {
        out.emplace_back(v, w);
        if (first_only) break;
      }
    }
    return out;
  }
};

MtaNode make_node(VertexSet A, VertexSet B, NodeKind kind = NodeKind::Internal) {
  MtaNode n;
  n.A = std::move(A);
  n.B = std::move(B);
  n.kind = kind;
  return n;
}

}  // namespace

std::vector<int> to_vector(const VertexSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

MatchingTree run_mta(const Graph& g, const SplitStrategy& strategy) {
  const int n = g.n_vertices();
  Stepper st(g);
  MatchingTree tree;
  tree.n_vertices = n;
  tree.strategy = strategy.name();
  tree.nodes.push_back(make_node(VertexSet(n), VertexSet(n)));
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (;;) {
      const VertexSet ab = tree.nodes[cur].A | tree.nodes[cur].B;
      const auto rem = st.remaining(ab);
      if (rem.empty()) {
        tree.nodes[cur].kind = NodeKind::LeafCritical;
        break;
      }
      if (int v = st.free_vertex(ab, rem); v >= 0) {
        MtaNode leaf = make_node(VertexSet(n), VertexSet(n), NodeKind::LeafEmpty);
        leaf.parent = cur;
        tree.nodes[cur].step = StepKind::Free;
        tree.nodes[cur].v = v;
        tree.nodes[cur].children = {static_cast<int>(tree.nodes.size())};
        tree.nodes.push_back(std::move(leaf));
        break;
      }
      if (auto p = st.pivots(ab, rem, true); !p.empty()) {
        const auto [v, w] = p.front();
        MtaNode child = make_node(tree.nodes[cur].A, tree.nodes[cur].B | st.nbr[w]);
        child.A.set(w);
        child.parent = cur;
        tree.nodes[cur].step = StepKind::Pivot;
        tree.nodes[cur].v = v;
        tree.nodes[cur].w = w;
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes[cur].children = {id};
        tree.nodes.push_back(std::move(child));
        cur = id;
        continue;
      }
      const SplitContext ctx{g, tree.nodes[cur].A, tree.nodes[cur].B, rem};
      const int v = strategy.choose(ctx, tree.warnings);
      if (!std::binary_search(rem.begin(), rem.end(), v))
        fail(ErrorKind::Contract, "strategy " + strategy.name() + " chose vertex " + std::to_string(v) +
                                      " outside the configuration");
      MtaNode left = make_node(tree.nodes[cur].A, tree.nodes[cur].B);
      left.B.set(v);
      MtaNode right = make_node(tree.nodes[cur].A, tree.nodes[cur].B | st.nbr[v]);
      right.A.set(v);
      left.parent = right.parent = cur;
      left.side = 0;
      right.side = 1;
      tree.nodes[cur].step = StepKind::Split;
      tree.nodes[cur].v = v;
      const int l = static_cast<int>(tree.nodes.size());
      tree.nodes[cur].children = {l, l + 1};
      tree.nodes.push_back(std::move(left));
      tree.nodes.push_back(std::move(right));
      stack.push_back(l + 1);
      stack.push_back(l);
      break;
    }
  }
  return tree;
}

long long CriticalReport::euler_characteristic() const {
  long long e = 0;
  for (const auto& [d, c] : histogram) e += ((d % 2 + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(c);
  return e;
}

std::optional<std::size_t> CriticalReport::min_size() const {
  if (!d_min_observed) return std::nullopt;
  return static_cast<std::size_t>(*d_min_observed + 1);
}

CriticalReport critical_cells(const MatchingTree& tree) {
  CriticalReport r;
  r.strategy = tree.strategy;
  r.warnings = tree.warnings;
  if (tree.nodes.empty()) return r;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[i];
    if (node.kind == NodeKind::LeafEmpty) {
      ++r.empty_leaf_count;
    } else if (node.kind == NodeKind::LeafCritical) {
      auto a = to_vector(node.A);
      const int d = static_cast<int>(a.size()) - 1;
      r.histogram[d]++;
      r.d_min_observed = r.d_min_observed ? std::min(*r.d_min_observed, d) : d;
      r.d_max_observed = r.d_max_observed ? std::max(*r.d_max_observed, d) : d;
      r.critical.push_back(std::move(a));
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
  return r;
}

PrepareResult split_prepare(const Graph& g, VertexSet A, VertexSet B, std::mt19937_64* rng) {
  const int n = g.n_vertices();
  if (static_cast<int>(A.size()) != n || static_cast<int>(B.size()) != n)
    fail(ErrorKind::Contract, "vertex sets do not match the graph");
  if (A.intersects(B)) fail(ErrorKind::Contract, "A and B overlap");
  Stepper st(g);
  PrepareResult res;
  for (;;) {
    const VertexSet ab = A | B;
    const auto rem = st.remaining(ab);
    if (rem.empty()) {
      res.status = PrepareStatus::Critical;
      break;
    }
    if (st.free_vertex(ab, rem) >= 0) {
      res.status = PrepareStatus::EmptyLeaf;
      break;
    }
    auto p = st.pivots(ab, rem, rng == nullptr);
    if (p.empty()) {
      res.status = PrepareStatus::SplitReady;
      break;
    }
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(*rng);
    const int w = p[pick].second;
    A.set(w);
    B |= st.nbr[w];
    ++res.pivots;
  }
  res.A = std::move(A);
  res.B = std::move(B);
  return res;
}

LowerBoundResult lower_bound_check(const Graph& g, const std::vector<int>& seeds) {
  VertexSet used(g.n_vertices());
  for (int s : seeds) {
    for (int v : closed_neighborhood(g, s)) {
      if (used.test(v)) fail(ErrorKind::Contract, "closed neighborhoods of the seeds are not pairwise disjoint");
      used.set(v);
    }
  }
  LowerBoundResult res;
  res.bound = seeds.size();
  res.report = critical_cells(run_mta(g, *avoid_set_strategy(seeds)));
  res.min_critical_size = res.report.min_size();
  res.holds = !res.min_critical_size || *res.min_critical_size >= res.bound;
  return res;
}

}  // namespace mcx
