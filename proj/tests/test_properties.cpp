#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"
#include "mcx/mta.hpp"
#include "mcx/poly.hpp"
#include "oracle.hpp"

using namespace mcx;

namespace {

struct Instance {
  std::string name;
  Graph graph;  // the graph whose independence complex is analyzed
};

// Fixed families plus seeded random graphs and trees, all as line graphs.
std::vector<Instance> instances() {
  std::vector<Instance> out;
  std::vector<GeneratorSpec> specs{
      spec::Path{6},          spec::Path{8},           spec::Cycle{6},          spec::Cycle{7},
      spec::Caterpillar{{2, 0, 3}}, spec::Caterpillar{{1, 1, 1, 1}}, spec::PerfectCaterpillar{3, 3},
      spec::OneChildTree{5},  spec::PerfectBinaryTree{3}, spec::AntennaTree{2},   spec::PolygonLine{3, 2},
      spec::PolygonLine{4, 2}, spec::Honeycomb{1, 1, 2}, spec::Honeycomb{2, 1, 1}, spec::Honeycomb{1, 2, 2},
      spec::Honeycomb{2, 2, 1}};
  for (const auto& s : specs) out.push_back({describe(s), line_graph(generate(s))});
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 14; ++i) {
    Graph g = oracle::random_graph(rng, 5 + i % 4, 5 + i % 9);
    out.push_back({"random:" + std::to_string(i), line_graph(g)});
  }
  for (int i = 0; i < 8; ++i) out.push_back({"tree:" + std::to_string(i), line_graph(oracle::random_tree(rng, 8 + i))});
  for (int i = 0; i < 6; ++i) out.push_back({"ind:" + std::to_string(i), oracle::random_graph(rng, 9, 8 + 2 * i)});
  return out;
}

std::vector<StrategyPtr> strategies_for(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.n_vertices());
  for (int i = 0; i < g.n_vertices(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> avoid(order.begin(), order.begin() + g.n_vertices() / 4);
  return {lexicographic_strategy(), forced_order_strategy(order), avoid_set_strategy(avoid)};
}

// Every split-step child of the tree, as a raw (A, B) before preparing.
std::vector<std::pair<VertexSet, VertexSet>> split_children(const Graph& g, const MatchingTree& t) {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (const auto& n : t.nodes) {
    if (n.step != StepKind::Split) continue;
    VertexSet left = n.B;
    left.set(n.v);
    out.emplace_back(n.A, left);
    VertexSet a = n.A, b = n.B;
    a.set(n.v);
    for (int w : g.neighbors(n.v)) b.set(w);
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<Graph> small_graphs(int max_edges) {
  std::vector<Graph> out;
  std::vector<Edge> cur;
  // Sorted edge lists whose vertices first appear in label order; every
  // isomorphism class occurs (a BFS labeling satisfies the rule).
  std::function<void(int)> rec = [&](int seen) {
    if (cur.size() >= 2) out.emplace_back(seen, cur);
    if (static_cast<int>(cur.size()) == max_edges) return;
    for (int u = 0; u <= seen; ++u)
      for (int v = u + 1; v <= seen + 1; ++v) {
        Edge e{u, v};
        if (!cur.empty() && !(cur.back() < e)) continue;
        int next = seen;
        if (u == seen) {
          if (v != seen + 1) continue;
          next = seen + 2;
        } else if (v == seen) {
          next = seen + 1;
        } else if (v > seen) {
          continue;
        }
        cur.push_back(e);
        rec(next);
        cur.pop_back();
      }
  };
  rec(0);
  return out;
}

bool brute_force_disconnected(const Graph& g) {
  const int m = g.n_edges();
  for (unsigned s = 1; s + 1 < (1u << m); ++s) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b)
        if ((s >> a & 1) && !(s >> b & 1) && !g.edges_incident(a, b)) ok = false;
    if (ok) return true;
  }
  return false;
}

MultilinearPoly M_or_zero(int n, int x) { return x <= n ? M_poly(n, x) : MultilinearPoly(); }

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("boundary of a boundary vanishes") {
  int tested = 0;
  for (const auto& inst : instances()) {
    SimplicialComplex c = independence_complex(inst.graph);
    for (int d = 1; d <= c.dimension(); ++d) {
      auto p = multiply(boundary_matrix(c, d - 1).matrix, boundary_matrix(c, d).matrix);
      bool zero = std::all_of(p.columns.begin(), p.columns.end(), [](const auto& col) { return col.empty(); });
      CAPTURE(inst.name);
      CAPTURE(d);
      CHECK(zero);
    }
    if (c.dimension() >= 1) {
      auto p = multiply(augmentation_matrix(c), boundary_matrix(c, 1).matrix);
      for (const auto& col : p.columns) CHECK(col.empty());
    }
    ++tested;
  }
  CHECK(tested >= 20);
}

TEST_CASE("Euler-Poincare") {
  int tested = 0;
  for (const auto& inst : instances()) {
    SimplicialComplex c = independence_complex(inst.graph);
    HomologyProfile p = reduced_homology(c);
    CAPTURE(inst.name);
    CHECK(p.euler_characteristic() == c.reduced_euler_characteristic());
    ++tested;
  }
  CHECK(tested >= 20);
}

TEST_CASE("Morse identity, inequalities and acyclicity on every run") {
  std::mt19937_64 rng(99);
  int runs = 0, acyclic_checked = 0;
  for (const auto& inst : instances()) {
    SimplicialComplex c = independence_complex(inst.graph);
    HomologyProfile p = reduced_homology(c);
    auto strategies = strategies_for(inst.graph, rng);
    if (inst.name.rfind("polygon-line:", 0) == 0) {
      const int n = inst.name[13] - '0', t = inst.name[15] - '0';
      strategies.push_back(smallest_aj_strategy_for(n, t));
    }
    if (inst.name.rfind("honeycomb:2,1,", 0) == 0) strategies.push_back(honeycomb21_strategy());
    for (const auto& s : strategies) {
      MatchingTree tree = run_mta(inst.graph, *s);
      CriticalReport rep = critical_cells(tree);
      CAPTURE(inst.name);
      CAPTURE(s->name());
      CHECK(rep.euler_characteristic() == c.reduced_euler_characteristic());
      for (int d = 0; d <= c.dimension(); ++d) {
        auto it = rep.histogram.find(d);
        CHECK((it == rep.histogram.end() ? 0 : it->second) >= p.betti_at(d));
      }
      if (inst.graph.n_vertices() <= kMorseMatchingGate) {
        MorseMatching m = induced_morse_matching(inst.graph, tree);
        CHECK(verify_acyclic(m, c));
        std::set<FaceMask> un(m.unmatched.begin(), m.unmatched.end()), crit;
        for (const auto& a : rep.critical) crit.insert(face_mask(a));
        CHECK(un == crit);
        ++acyclic_checked;
      }
      ++runs;
    }
  }
  CHECK(runs >= 100);
  CHECK(acyclic_checked >= 50);
}

TEST_CASE("split preparing does not depend on the pivot order") {
  std::mt19937_64 rng(4242);
  std::vector<std::pair<Graph, std::pair<VertexSet, VertexSet>>> cases;
  for (const auto& inst : instances()) {
    if (cases.size() >= 10) break;
    MatchingTree tree = run_mta(inst.graph, *lexicographic_strategy());
    auto kids = split_children(inst.graph, tree);
    // Prefer a child that needs several pivots.
    std::size_t best = 0, best_pivots = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      auto r = split_prepare(inst.graph, kids[i].first, kids[i].second);
      if (r.pivots > best_pivots) {
        best = i;
        best_pivots = r.pivots;
      }
    }
    if (best_pivots >= 2) cases.emplace_back(inst.graph, kids[best]);
  }
  REQUIRE(cases.size() == 10);
  for (const auto& [g, node] : cases) {
    PrepareResult ref = split_prepare(g, node.first, node.second);
    for (int k = 0; k < 100; ++k) {
      PrepareResult r = split_prepare(g, node.first, node.second, &rng);
      CHECK((r.status == PrepareStatus::EmptyLeaf) == (ref.status == PrepareStatus::EmptyLeaf));
      if (r.status == PrepareStatus::EmptyLeaf) continue;
      CHECK(r.A.count() == ref.A.count());
      CHECK((r.A | r.B) == (ref.A | ref.B));
    }
  }
}

TEST_CASE("M recursions") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= k; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(M_poly(2 * k + 1, 2 * l + 1) ==
            M_poly(2 * k, 2 * l).times_variable(2 * k + 1) + M_or_zero(2 * k - 1, 2 * l + 1));
      CHECK(M_poly(2 * k + 2, 2 * l) ==
            M_poly(2 * k + 1, 2 * l - 1).times_variable(2 * k + 2) + M_poly(2 * k, 2 * l));
    }
}

TEST_CASE("L recursion") {
  for (int k = 2; k <= 8; ++k) {
    MultilinearPoly rhs = L_poly(k - 1).shifted(k - 1, 1).times_variable(k) + L_poly(k - 1);
    CAPTURE(k);
    CHECK(L_poly(k) == rhs);
  }
}

TEST_CASE("a_count against enumeration") {
  for (int n = 0; n <= 14; ++n)
    for (int x = 0; x <= n; ++x) {
      std::vector<std::vector<int>> brute;
      for (unsigned s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) != x) continue;
        bool ok = true;
        int run = 0;
        for (int i = 0; i <= n; ++i) {
          if (i < n && !(s >> i & 1)) {
            ++run;
            continue;
          }
          ok = ok && run % 2 == 0;
          run = 0;
        }
        if (!ok) continue;
        std::vector<int> seq;
        for (int i = 0; i < n; ++i)
          if (s >> i & 1) seq.push_back(i + 1);
        brute.push_back(seq);
      }
      auto got = enumerate_A(n, x);
      std::sort(got.begin(), got.end());
      std::sort(brute.begin(), brute.end());
      CAPTURE(n);
      CAPTURE(x);
      CHECK(got == brute);
      CHECK(a_count(n, x) == static_cast<long>(brute.size()));
    }
}

TEST_CASE("disconnection iff witness, diameter at most four") {
  auto graphs = small_graphs(6);
  CHECK(graphs.size() > 1000);
  int disconnected = 0, diameter_two = 0;
  for (const Graph& g : graphs) {
    SimplicialComplex c = matching_complex(g);
    DiameterResult d = one_skeleton_diameter(c);
    const bool brute = brute_force_disconnected(g);
    auto w = disconnection_witness(g);
    CAPTURE(to_edge_list(g));
    CHECK(brute == !d.connected);
    CHECK(w.has_value() == brute);
    if (w) {
      std::vector<bool> in(g.n_edges(), false);
      for (int e : *w) in[e] = true;
      CHECK(!w->empty());
      CHECK(static_cast<int>(w->size()) < g.n_edges());
      for (int a = 0; a < g.n_edges(); ++a)
        for (int b = 0; b < g.n_edges(); ++b)
          if (in[a] && !in[b]) CHECK(g.edges_incident(a, b));
      ++disconnected;
    } else {
      CHECK(d.diameter <= 4);
    }
    // No pair of edges covers the rest, and some two edges meet: diameter 2.
    bool some_incident = false, covering_pair = false;
    const int m = g.n_edges();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        some_incident = some_incident || g.edges_incident(a, b);
        bool covers = true;
        for (int e = 0; e < m; ++e)
          if (e != a && e != b && !g.edges_incident(e, a) && !g.edges_incident(e, b)) covers = false;
        covering_pair = covering_pair || covers;
      }
    if (some_incident && !covering_pair) {
      CHECK(d.connected);
      CHECK(d.diameter == 2);
      ++diameter_two;
    }
  }
  CHECK(disconnected > 0);
  CHECK(diameter_two > 0);
}

TEST_CASE("forests never show torsion") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    Graph t = oracle::random_tree(rng, 6 + i % 12);
    HomologyProfile p = reduced_homology(matching_complex(t));
    CHECK(!p.has_torsion());
    CHECK_NOTHROW(wedge_from_homology(p, true));
  }
}

}  // TEST_SUITE
