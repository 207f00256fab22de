// Acceptance runner: one PASS/FAIL line per criterion. Limits are wall-clock
// seconds and are fixed here, not configurable.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"
#include "mcx/mta.hpp"
#include "mcx/tables.hpp"

using namespace mcx;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string betti_string(const HomologyProfile& p) {
  std::string s = "(";
  for (std::size_t d = 0; d < p.betti.size(); ++d) s += (d ? "," : "") + std::to_string(p.betti[d]);
  return s + ")";
}

std::string sizes(const std::map<int, std::size_t>& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, c] : h) {
    s += (first ? "" : ", ") + std::to_string(d) + ": " + std::to_string(c);
    first = false;
  }
  return s + "}";
}

Outcome worked_example() {
  Graph l = line_graph(generate(spec::Honeycomb{1, 1, 2}));
  MatchingTree tree = run_mta(l, *forced_order_strategy({0, 5}));  // labels 1 and 6
  CriticalReport rep = critical_cells(tree);
  std::set<std::vector<int>> got;
  for (auto a : rep.critical) {
    for (int& v : a) ++v;
    got.insert(a);
  }
  int leaves = 0;
  for (const auto& n : tree.nodes) leaves += n.children.empty();
  Outcome o;
  o.pass = leaves == 3 && rep.empty_leaf_count == 1 && got == std::set<std::vector<int>>{{1, 6, 11}, {4, 5, 11}} &&
           rep.histogram == std::map<int, std::size_t>{{2, 2}};
  o.details = std::to_string(leaves) + " leaves, cells of dims " + sizes(rep.histogram);
  return o;
}

Outcome oracle_types() {
  struct Case {
    GeneratorSpec spec;
    std::vector<std::size_t> betti;
  };
  const std::vector<Case> cases{{spec::Cycle{6}, {0, 2}},
                                {spec::Honeycomb{1, 1, 2}, {0, 0, 2}},
                                {spec::PerfectBinaryTree{2}, {0, 3}},
                                {spec::PerfectBinaryTree{3}, {0, 0, 0, 4, 1}}};
  Outcome o;
  for (const auto& c : cases) {
    HomologyProfile p = reduced_homology(matching_complex(generate(c.spec)));
    bool ok = !p.has_torsion() && !p.empty_complex;
    for (std::size_t d = 0; d < std::max(p.betti.size(), c.betti.size()); ++d)
      ok = ok && p.betti_at(static_cast<int>(d)) == (d < c.betti.size() ? c.betti[d] : 0);
    o.pass = o.pass && ok;
    o.details += describe(c.spec) + " " + betti_string(p) + (ok ? "" : " MISMATCH") + "; ";
  }
  return o;
}

Outcome tables(const std::string& golden_dir) {
  Outcome o;
  for (int id = 1; id <= 3; ++id) {
    std::ifstream in(golden_dir + "/table" + std::to_string(id) + ".txt");
    std::stringstream ss;
    ss << in.rdbuf();
    const bool ok = in.good() || in.eof() ? sphere_table(id).to_text() == ss.str() : false;
    o.pass = o.pass && ok;
    o.details += "table " + std::to_string(id) + (ok ? " matches; " : " DIFFERS; ");
  }
  return o;
}

Outcome caterpillar_sweep() {
  std::size_t total = 0, bad = 0;
  std::string first_bad;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> legs(n, 0);
    legs[0] = 1;
    for (;;) {
      Graph g = generate(spec::Caterpillar{legs});
      WedgeDescriptor oracle = wedge_from_homology(reduced_homology(matching_complex(g)), true);
      WedgeDescriptor formula = arbitrary_caterpillar_wedge(legs);
      ++total;
      if (!(oracle == formula)) {
        if (!bad++) first_bad = describe(spec::Caterpillar{legs});
      }
      int i = n - 1;
      while (i >= 0 && legs[i] == 3) {
        legs[i] = i == 0 ? 1 : 0;
        --i;
      }
      if (i < 0) break;
      ++legs[i];
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.details = std::to_string(total) + " leg lists, " + std::to_string(bad) + " mismatches" +
              (bad ? " (first " + first_bad + ")" : "");
  return o;
}

Outcome polygon_windows() {
  const std::vector<std::pair<int, int>> cases{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};
  Outcome o;
  for (auto [n, t] : cases) {
    BoundsResult b = polygon_line_bounds(n, t);
    Graph l = line_graph(generate(spec::PolygonLine{n, t}));
    CriticalReport rep = critical_cells(run_mta(l, *smallest_aj_strategy_for(n, t)));
    HomologyProfile p = reduced_homology(independence_complex(l));
    bool ok = true;
    std::size_t cells = 0;
    for (const auto& [d, c] : rep.histogram) {
      ok = ok && d >= b.d_min && d <= b.d_max;
      cells += c;
    }
    for (std::size_t d = 0; d < p.betti.size(); ++d)
      if (static_cast<int>(d) < b.d_min || static_cast<int>(d) > b.d_max) ok = ok && p.betti[d] == 0;
    if (n % 3 == 1) ok = ok && cells == static_cast<std::size_t>(t);
    o.pass = o.pass && ok;
    o.details += "(" + std::to_string(n) + "," + std::to_string(t) + ") window [" + std::to_string(b.d_min) + "," +
                 std::to_string(b.d_max) + "] cells " + sizes(rep.histogram) + (ok ? "" : " OUTSIDE") + "; ";
  }
  return o;
}

Outcome honeycomb_windows() {
  Outcome o;
  for (int t = 1; t <= 2; ++t) {
    BoundsResult b = honeycomb21_bounds(t);
    Graph l = line_graph(generate(spec::Honeycomb{2, 1, t}));
    HomologyProfile p = reduced_homology(independence_complex(l));
    CriticalReport rep = critical_cells(run_mta(l, *honeycomb21_strategy()));
    bool ok = true;
    for (std::size_t d = 0; d < p.betti.size(); ++d)
      if (!b.allows(static_cast<int>(d))) ok = ok && p.betti[d] == 0;
    const std::size_t min_size = rep.min_size().value_or(SIZE_MAX);
    ok = ok && min_size >= static_cast<std::size_t>(2 * t + 1);
    o.pass = o.pass && ok;
    o.details += "t=" + std::to_string(t) + " betti " + betti_string(p) + " window [" + std::to_string(b.d_min) + ", " +
                 b.d_max_exact->to_string() + ") min cell size " + std::to_string(min_size) + " warnings " +
                 std::to_string(rep.warnings.size()) + (ok ? "" : " VIOLATED") + "; ";
  }
  return o;
}

Outcome property_suites() {
  doctest::Context ctx;
  ctx.setOption("test-suite", "properties");
  ctx.setOption("minimal", true);
  const int rc = ctx.run();
  Outcome o;
  o.pass = rc == 0;
  o.details = rc == 0 ? "all property suites passed" : "property suites failed (see doctest output above)";
  return o;
}

void stretch_targets() {
  using clock = std::chrono::steady_clock;
  auto report = [](const char* what, const GeneratorSpec& s, std::size_t budget) {
    auto t0 = clock::now();
    try {
      HomologyProfile p = reduced_homology(matching_complex(generate(s), budget));
      const double secs = std::chrono::duration<double>(clock::now() - t0).count();
      std::cout << "REPORT criterion 8: " << what << " " << describe(s) << " betti " << betti_string(p)
                << (p.has_torsion() ? " with torsion" : " no torsion") << " in " << secs << " s\n";
    } catch (const std::exception& e) {
      std::cout << "REPORT criterion 8: " << what << " " << describe(s) << " not computed: " << e.what() << "\n";
    }
  };
  report("perfect binary tree", spec::PerfectBinaryTree{4}, 400'000'000);
  report("honeycomb", spec::Honeycomb{3, 2, 1}, 400'000'000);
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--big") == 0) big = true;

  const std::vector<Criterion> criteria{
      {1, "worked MTA example", 1.0, worked_example},
      {2, "oracle homotopy types", 30.0, oracle_types},
      {3, "table reproduction", 1.0, [] { return tables(MCX_GOLDEN_DIR); }},
      {4, "caterpillar formula vs oracle", 600.0, caterpillar_sweep},
      {5, "polygon-line windows", 300.0, polygon_windows},
      {6, "2x1xt honeycomb windows", 600.0, honeycomb_windows},
      {7, "property suites", 600.0, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.limit_s;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << secs << " s, limit "
              << c.limit_s << " s] " << o.details << "\n";
  }
  if (big)
    stretch_targets();
  else
    std::cout << "SKIP criterion 8: stretch targets, run with --big\n";
  return failed ? 1 : 0;
}
