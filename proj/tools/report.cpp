#include "report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "mcx/error.hpp"

namespace mcx::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string betti_string(const HomologyProfile& p) {
  std::string s = "(";
  for (std::size_t d = 0; d < p.betti.size(); ++d) s += (d ? "," : "") + std::to_string(p.betti[d]);
  return s + ")";
}

std::string histogram_string(const CriticalReport& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, c] : r.histogram) {
    s += (first ? "" : ", ") + std::to_string(d) + ": " + std::to_string(c);
    first = false;
  }
  return s + "}";
}

void add(RunReport& r, std::string name, std::string lhs, std::string cmp, std::string rhs, bool pass,
         std::string details = {}) {
  r.checks.push_back({std::move(name), std::move(lhs), std::move(cmp), std::move(rhs), pass, std::move(details)});
}

const spec::Honeycomb* honeycomb21_spec(const Instance& inst) {
  if (!inst.spec) return nullptr;
  const auto* h = std::get_if<spec::Honeycomb>(&*inst.spec);
  return (h && h->r == 2 && h->s == 1) ? h : nullptr;
}

}  // namespace

bool RunReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> RunReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Instance load_instance(const std::string& spec_text, const std::string& graph_file) {
  if (!spec_text.empty() && !graph_file.empty()) fail(ErrorKind::Parse, "give either a spec or --graph, not both");
  if (!graph_file.empty()) {
    const std::string text = read_file(graph_file);
    const auto first = text.find_first_not_of(" \t\r\n");
    Graph g;
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("bad graph JSON: ") + e.what());
      }
      g = graph_from_json(j);
    } else {
      g = parse_edge_list(text);
    }
    return {graph_file, std::move(g), std::nullopt};
  }
  if (spec_text.empty()) fail(ErrorKind::Parse, "no input: give a family:params spec or --graph FILE");
  const GeneratorSpec s = parse_spec(spec_text);
  return {describe(s), generate(s), s};
}

Graph analysis_graph(const Instance& inst, bool on_graph) { return on_graph ? inst.graph : line_graph(inst.graph); }

StrategyPtr resolve_strategy(const Instance& inst, const VerifyOptions& opt) {
  const std::string& name = opt.strategy;
  if (name == "lexicographic") return lexicographic_strategy();
  if (name == "forced") {
    if (opt.order.empty()) fail(ErrorKind::InvalidSpec, "strategy forced needs --order");
    return forced_order_strategy(opt.order);
  }
  if (name == "avoid") return avoid_set_strategy(opt.avoid);
  const auto* pl = inst.spec ? std::get_if<spec::PolygonLine>(&*inst.spec) : nullptr;
  if (name == "smallest-aj") {
    if (!pl || opt.on_graph) fail(ErrorKind::InvalidSpec, "strategy smallest-aj applies to polygon-line line graphs");
    return smallest_aj_strategy_for(pl->n, pl->t);
  }
  if (name == "honeycomb21") {
    if (!honeycomb21_spec(inst) || opt.on_graph)
      fail(ErrorKind::InvalidSpec, "strategy honeycomb21 applies to honeycomb:2,1,t line graphs");
    return honeycomb21_strategy();
  }
  if (!name.empty()) fail(ErrorKind::InvalidSpec, "unknown strategy " + name);
  if (!opt.on_graph && pl) return smallest_aj_strategy_for(pl->n, pl->t);
  if (!opt.on_graph && honeycomb21_spec(inst)) return honeycomb21_strategy();
  return lexicographic_strategy();
}

std::optional<WedgeDescriptor> formula_for(const GeneratorSpec& s) {
  if (const auto* p = std::get_if<spec::Path>(&s)) return path_cycle_homotopy(p->n, false);
  if (const auto* p = std::get_if<spec::Cycle>(&s)) return path_cycle_homotopy(p->n, true);
  if (const auto* p = std::get_if<spec::Caterpillar>(&s)) {
    if (p->legs.size() == 1 && p->legs[0] == 0) return std::nullopt;
    return arbitrary_caterpillar_wedge(p->legs);
  }
  if (const auto* p = std::get_if<spec::PerfectCaterpillar>(&s)) {
    if (p->m >= 2) return perfect_caterpillar_wedge(p->m, p->n);
    if (p->n == 1 && p->m == 0) return std::nullopt;
    return arbitrary_caterpillar_wedge(std::vector<int>(p->n, p->m));
  }
  if (const auto* p = std::get_if<spec::OneChildTree>(&s)) return one_child_tree_homotopy(p->i);
  if (const auto* p = std::get_if<spec::PolygonLine>(&s)) {
    if (p->t == 1) return path_cycle_homotopy(2 * p->n, true);
    if (p->n > 2) return polygon_line_bounds(p->n, p->t).exact;
  }
  return std::nullopt;
}

json homotopy_json(const GeneratorSpec& s) {
  json j = json::object();
  j["input"] = describe(s);
  if (auto w = formula_for(s)) j["homotopy"] = to_json(*w);
  if (const auto* p = std::get_if<spec::PolygonLine>(&s); p && p->n > 2 && p->t > 1)
    j["bounds"] = to_json(polygon_line_bounds(p->n, p->t));
  if (const auto* p = std::get_if<spec::Honeycomb>(&s)) {
    j["connectivity_bound"] = honeycomb_connectivity_bound(p->r, p->s, p->t);
    if (p->r == 2 && p->s == 1) j["bounds"] = to_json(honeycomb21_bounds(p->t));
  }
  if (const auto* p = std::get_if<spec::PerfectBinaryTree>(&s); p && p->h >= 3)
    j["connectivity_bound"] = binary_tree_connectivity_bound(p->h);
  if (const auto* p = std::get_if<spec::Caterpillar>(&s); p && !p->legs.empty() && p->legs[0] >= 1) {
    json sym = json::object();
    for (const auto& [d, poly] : arbitrary_caterpillar_symbolic(p->legs)) sym[std::to_string(d)] = poly.to_string();
    j["symbolic"] = sym;
  }
  if (!j.contains("homotopy") && !j.contains("bounds") && !j.contains("connectivity_bound"))
    j["note"] = "no closed form for this family; use homology or verify";
  return j;
}

RunReport verify(const Instance& inst, const VerifyOptions& opt) {
  RunReport r;
  r.input = inst.label;
  auto t0 = Clock::now();
  const Graph g = analysis_graph(inst, opt.on_graph);
  r.stages["graph"] = {{"n", inst.graph.n_vertices()}, {"m", inst.graph.n_edges()}, {"analyzed_vertices", g.n_vertices()}};
  r.timing_ms["graph"] = ms_since(t0);

  t0 = Clock::now();
  const SimplicialComplex c = independence_complex(g, opt.face_budget);
  json fv = json::array();
  for (auto f : c.f_vector()) fv.push_back(f);
  r.stages["complex"] = {{"f_vector", fv}, {"dimension", c.dimension()}, {"faces", c.face_count()}};
  r.timing_ms["complex"] = ms_since(t0);

  t0 = Clock::now();
  const auto strategy = resolve_strategy(inst, opt);
  const MatchingTree tree = run_mta(g, *strategy);
  const CriticalReport crit = critical_cells(tree);
  r.stages["mta"] = to_json(crit);
  r.timing_ms["mta"] = ms_since(t0);

  t0 = Clock::now();
  const HomologyProfile prof = reduced_homology(c);
  r.stages["homology"] = to_json(prof);
  r.timing_ms["homology"] = ms_since(t0);

  // Morse count identity and inequalities.
  add(r, "euler-morse", "sum (-1)^d critical_d = " + std::to_string(crit.euler_characteristic()), "==",
      "reduced euler characteristic = " + std::to_string(c.reduced_euler_characteristic()),
      crit.euler_characteristic() == c.reduced_euler_characteristic());
  {
    bool ok = true;
    std::string bad;
    for (int d = 0; d < static_cast<int>(prof.betti.size()); ++d) {
      auto it = crit.histogram.find(d);
      const std::size_t cd = it == crit.histogram.end() ? 0 : it->second;
      if (cd < prof.betti[d]) {
        ok = false;
        bad += " d=" + std::to_string(d);
      }
    }
    add(r, "morse-inequality", "critical histogram " + histogram_string(crit), ">=", "betti " + betti_string(prof), ok,
        ok ? "" : "violated at" + bad);
  }

  t0 = Clock::now();
  if (inst.spec && !opt.on_graph) {
    const bool forest = is_forest_family(*inst.spec);
    if (auto w = formula_for(*inst.spec)) {
      r.stages["formula"] = to_json(*w);
      WedgeDescriptor oracle;
      std::string details;
      bool ok = true;
      try {
        oracle = wedge_from_homology(prof, forest);
      } catch (const Error& e) {
        ok = false;
        details = e.what();
      }
      ok = ok && oracle == *w;
      add(r, "formula-vs-oracle", "formula " + w->to_string(), "==", "oracle " + oracle.to_string(), ok, details);
    }
    if (forest && !r.stages.contains("formula")) {
      add(r, "forest-torsion-free", "torsion", "==", "none", !prof.has_torsion());
    }
    const bool default_strategy = opt.strategy.empty();
    std::optional<BoundsResult> bounds;
    std::string bounds_name;
    if (const auto* p = std::get_if<spec::PolygonLine>(&*inst.spec); p && p->n > 2 && p->t > 1) {
      bounds = polygon_line_bounds(p->n, p->t);
      bounds_name = "polygon-line";
    }
    if (const auto* h = honeycomb21_spec(inst)) {
      bounds = honeycomb21_bounds(h->t);
      bounds_name = "honeycomb21";
    }
    if (bounds) {
      const std::string window = "[" + std::to_string(bounds->d_min) + ", " +
                                 (bounds->d_max_exact ? bounds->d_max_exact->to_string() + ")"
                                                      : std::to_string(bounds->d_max) + "]");
      bool hom_ok = true;
      for (int d = 0; d < static_cast<int>(prof.betti.size()); ++d)
        if (prof.betti[d] != 0 && !bounds->allows(d)) hom_ok = false;
      add(r, "bounds-window-homology", "betti " + betti_string(prof), "inside", bounds_name + " window " + window,
          hom_ok);
      if (default_strategy) {
        bool cells_ok = true;
        for (const auto& [d, cnt] : crit.histogram)
          if (!bounds->allows(d)) cells_ok = false;
        add(r, "bounds-window-cells", "critical dims " + histogram_string(crit), "inside",
            bounds_name + " window " + window, cells_ok);
      }
      r.stages["bounds"] = to_json(*bounds);
    }
    std::optional<long long> conn;
    if (const auto* h = std::get_if<spec::Honeycomb>(&*inst.spec))
      conn = honeycomb_connectivity_bound(h->r, h->s, h->t);
    if (const auto* p = std::get_if<spec::PerfectBinaryTree>(&*inst.spec); p && p->h >= 3)
      conn = binary_tree_connectivity_bound(p->h);
    if (conn) {
      bool ok = true;
      for (int d = 0; d <= *conn && d < static_cast<int>(prof.betti.size()); ++d)
        if (prof.betti[d] != 0) ok = false;
      add(r, "connectivity-bound", "betti " + betti_string(prof), "zero through",
          "dimension " + std::to_string(*conn), ok);
    }
  }
  r.timing_ms["formulas"] = ms_since(t0);

  if (g.n_vertices() <= opt.acyclic_gate) {
    t0 = Clock::now();
    const MorseMatching mm = induced_morse_matching(g, tree, opt.acyclic_gate, opt.face_budget);
    const bool acyclic = verify_acyclic(mm, c);
    add(r, "acyclicity", "induced matching with " + std::to_string(mm.pairs.size()) + " pairs", "is", "acyclic",
        acyclic);
    std::vector<FaceMask> crit_masks;
    for (const auto& a : crit.critical) crit_masks.push_back(face_mask(a));
    auto sorted = [](std::vector<FaceMask> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    add(r, "unmatched-are-critical", std::to_string(mm.unmatched.size()) + " unmatched faces", "==",
        std::to_string(crit_masks.size()) + " critical cells", sorted(mm.unmatched) == sorted(crit_masks));
    r.stages["matching"] = {{"pairs", mm.pairs.size()}, {"empty_face_paired", mm.empty_face_paired}};
    r.timing_ms["acyclicity"] = ms_since(t0);
  }
  return r;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json j = {{"n", g.n_vertices()}, {"edges", edges}};
  if (g.edge_labels()) j["labels"] = *g.edge_labels();
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "edges must be [u, v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(n, std::move(edges));
    if (j.contains("labels")) g = g.with_edge_labels(j.at("labels").get<std::vector<int>>());
    return g;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad graph JSON: ") + e.what());
  }
}

json to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (FaceMask f : c.facets()) facets.push_back(face_vertices(f));
  return {{"n", c.universe()}, {"facets", facets}};
}

json to_json(const CriticalReport& r) {
  json hist = json::object();
  for (const auto& [d, c] : r.histogram) hist[std::to_string(d)] = c;
  json j = {{"critical", r.critical},
            {"histogram", hist},
            {"d_min", r.d_min_observed ? json(*r.d_min_observed) : json(nullptr)},
            {"d_max", r.d_max_observed ? json(*r.d_max_observed) : json(nullptr)},
            {"empty_leaves", r.empty_leaf_count},
            {"strategy", r.strategy},
            {"warnings", r.warnings}};
  return j;
}

json to_json(const HomologyProfile& p) {
  json betti = json::object(), torsion = json::object();
  for (std::size_t d = 0; d < p.betti.size(); ++d) betti[std::to_string(d)] = p.betti[d];
  for (std::size_t d = 0; d < p.torsion.size(); ++d) {
    if (p.torsion[d].empty()) continue;
    json coeffs = json::array();
    for (const auto& t : p.torsion[d]) coeffs.push_back(to_string(t));
    torsion[std::to_string(d)] = coeffs;
  }
  json j = {{"betti", betti}, {"torsion", torsion}};
  if (p.empty_complex) j["empty_complex"] = true;
  return j;
}

json to_json(const WedgeDescriptor& w) {
  json spheres = json::object();
  for (const auto& [d, c] : w.spheres()) spheres[std::to_string(d)] = to_string(c);
  return {{"contractible", w.is_contractible()}, {"spheres", spheres}};
}

json to_json(const BoundsResult& b) {
  json j = {{"d_min", b.d_min}, {"d_max", b.d_max}, {"connectivity", b.connectivity}};
  if (b.d_max_exact) j["d_max_exact"] = b.d_max_exact->to_string();
  if (b.exact) j["exact"] = to_json(*b.exact);
  return j;
}

json to_json(const SphereTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"label", r.label}, {"cells", r.cells}});
  return {{"table", t.id}, {"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

json to_json(const RunReport& r, bool with_timing) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"comparison", c.comparison},
                      {"rhs", c.rhs},
                      {"pass", c.pass},
                      {"details", c.details}});
  json j = {{"input", r.input}, {"stages", r.stages}, {"checks", checks}, {"ok", r.ok()}};
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

std::string to_text(const CriticalReport& r) {
  std::ostringstream os;
  os << "strategy: " << r.strategy << "\n";
  os << "critical cells: " << r.critical.size() << "\n";
  for (const auto& a : r.critical) os << "  {" << join(a, ", ") << "}  dim " << static_cast<int>(a.size()) - 1 << "\n";
  os << "histogram: " << histogram_string(r) << "\n";
  os << "empty leaves: " << r.empty_leaf_count << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string to_text(const HomologyProfile& p) {
  std::ostringstream os;
  if (p.empty_complex) os << "complex is {empty set}: reduced H_-1 = Z\n";
  for (std::size_t d = 0; d < p.betti.size(); ++d) {
    os << "H_" << d << ": rank " << p.betti[d];
    for (const auto& t : p.torsion[d]) os << " + Z/" << to_string(t);
    os << "\n";
  }
  return os.str();
}

std::string to_text(const RunReport& r, bool with_timing) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.lhs << " " << c.comparison << " " << c.rhs;
    if (!c.details.empty()) os << " (" << c.details << ")";
    os << "\n";
  }
  if (with_timing)
    for (const auto& [stage, ms] : r.timing_ms) os << "time " << stage << ": " << ms << " ms\n";
  os << (r.ok() ? "all checks passed" : "checks failed") << "\n";
  return os.str();
}

}  // namespace mcx::cli
