#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "mcx/error.hpp"
#include "report.hpp"

namespace mcx::cli {
namespace {

constexpr std::size_t kBigFaceBudget = 400'000'000;

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t face_budget = 0;
  bool big = false;
  bool timing = false;

  std::size_t budget() const { return face_budget ? face_budget : (big ? kBigFaceBudget : kDefaultFaceBudget); }
  bool json() const { return format == "json"; }
};

struct InputOpts {
  std::string spec;
  std::string graph_file;
  std::string family;
  int n = -1, t = -1, r = -1, s = -1, m = -1, h = -1, i = -1;
  std::string legs;

  void attach(CLI::App* app) {
    app->add_option("spec", spec, "family:params, e.g. honeycomb:1,1,2 or caterpillar:2,0,3");
    app->add_option("--graph", graph_file, "edge-list or JSON graph file");
    app->add_option("--family", family, "family name (alternative to the positional spec)");
    app->add_option("--n", n);
    app->add_option("--t", t);
    app->add_option("--r", r);
    app->add_option("--s", s);
    app->add_option("--m", m);
    app->add_option("--height", h);
    app->add_option("--i", i);
    app->add_option("--legs", legs, "comma-separated leg counts");
  }

  std::string spec_text() const {
    if (family.empty()) return spec;
    if (!spec.empty()) fail(ErrorKind::Parse, "give either a positional spec or --family, not both");
    auto need = [&](int v, const char* name) {
      if (v < 0) fail(ErrorKind::Parse, "--family " + family + " needs --" + name);
      return std::to_string(v);
    };
    if (family == "path" || family == "cycle") return family + ":" + need(n, "n");
    if (family == "caterpillar") {
      if (legs.empty()) fail(ErrorKind::Parse, "--family caterpillar needs --legs");
      return family + ":" + legs;
    }
    if (family == "perfect-caterpillar") return family + ":" + need(m, "m") + "," + need(n, "n");
    if (family == "one-child-tree") return family + ":" + need(i, "i");
    if (family == "perfect-binary-tree" || family == "antenna-tree") return family + ":" + need(h, "height");
    if (family == "polygon-line") return family + ":" + need(n, "n") + "," + need(t, "t");
    if (family == "honeycomb") return family + ":" + need(r, "r") + "," + need(s, "s") + "," + need(t, "t");
    fail(ErrorKind::Parse, "unknown family \"" + family + "\"");
  }

  Instance load() const { return load_instance(spec_text(), graph_file); }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  return out;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Inconsistency: return 1;
    case ErrorKind::Parse: return 2;
    case ErrorKind::InvalidSpec: return 3;
    case ErrorKind::Contract: return 3;
    case ErrorKind::Budget: return 4;
  }
  return 1;
}

void emit(std::ostream& out, const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    out << j.dump(2) << "\n";
  else
    out << text;
}

// All leg lists of length 1..max_n with entries 0..max_leg and a leading entry >= 1.
std::vector<std::vector<int>> caterpillar_lists(int max_n, int max_leg) {
  std::vector<std::vector<int>> out;
  if (max_leg < 1) fail(ErrorKind::InvalidSpec, "--max-leg must be at least 1");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> cur(n, 0);
    cur[0] = 1;
    for (;;) {
      out.push_back(cur);
      int k = n - 1;
      for (; k >= 0; --k) {
        if (cur[k] < max_leg) {
          ++cur[k];
          break;
        }
        cur[k] = k == 0 ? 1 : 0;
      }
      if (k < 0) break;
    }
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int max_edges) {
  const int n = std::uniform_int_distribution<int>(2, std::max(2, max_edges))(rng);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  const int m = std::uniform_int_distribution<int>(1, std::min<int>(max_edges, all.size()))(rng);
  all.resize(m);
  std::sort(all.begin(), all.end());
  return Graph(n, all);
}

struct SweepItem {
  Instance inst;
};

struct SweepResult {
  std::string input;
  std::string status;  // ok, fail, skipped
  std::vector<std::string> failing;
  std::string details;
};

std::vector<SweepResult> run_sweep(const std::vector<Instance>& items, const VerifyOptions& opt, int jobs) {
  std::vector<SweepResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      SweepResult res{items[k].label, "ok", {}, {}};
      try {
        const RunReport rep = verify(items[k], opt);
        if (!rep.ok()) {
          res.status = "fail";
          res.failing = rep.failing();
        }
      } catch (const Error& e) {
        res.status = e.kind() == ErrorKind::Budget ? "skipped" : "fail";
        res.details = e.what();
      }
      results[k] = std::move(res);
    }
  };
  std::vector<std::future<void>> pool;
  for (int w = 0; w < std::max(1, jobs); ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching complexes: generation, matching-tree runs, homology and closed-form homotopy types"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--face-budget", g.face_budget, "maximum number of faces to materialize");
  app.add_flag("--big", g.big, "raise the face budget for stretch instances");
  app.add_flag("--timing", g.timing, "include per-stage timings (not byte-stable)");

  auto* gen = app.add_subcommand("generate", "write a family graph as an edge list or JSON");
  InputOpts gen_in;
  gen_in.attach(gen);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  VerifyOptions vopt;
  std::string order_text, avoid_text;
  auto attach_mta_opts = [&](CLI::App* sub) {
    sub->add_option("--strategy", vopt.strategy, "lexicographic, smallest-aj, honeycomb21, forced, avoid");
    sub->add_option("--order", order_text, "split order for the forced strategy (0-based vertices)");
    sub->add_option("--avoid", avoid_text, "vertices the avoid strategy never splits on");
    sub->add_flag("--on-graph", vopt.on_graph, "analyze Ind(G) instead of the matching complex");
  };

  auto* mta = app.add_subcommand("mta", "run the matching tree algorithm on the line graph");
  InputOpts mta_in;
  mta_in.attach(mta);
  attach_mta_opts(mta);

  auto* hom = app.add_subcommand("homology", "reduced integral homology of the matching complex");
  InputOpts hom_in;
  hom_in.attach(hom);
  bool hom_on_graph = false, serial = false;
  hom->add_flag("--on-graph", hom_on_graph, "use Ind(G) instead of the matching complex");
  hom->add_flag("--serial", serial, "reduce boundary matrices one at a time");

  auto* hty = app.add_subcommand("homotopy", "closed-form homotopy types and bounds");
  InputOpts hty_in;
  hty_in.attach(hty);
  std::string m_poly, alternating;
  int l_poly = -1;
  hty->add_option("--M-poly", m_poly, "n,x: print the polynomial M_x^n");
  hty->add_option("--L-poly", l_poly, "k: print the polynomial L_k");
  hty->add_option("--alternating", alternating, "a_1,...,a_k: wedge for legs at every other spine vertex");

  auto* ver = app.add_subcommand("verify", "cross-check MTA, homology and formulas on one instance");
  InputOpts ver_in;
  ver_in.attach(ver);
  attach_mta_opts(ver);
  ver->add_option("--acyclic-gate", vopt.acyclic_gate, "largest analyzed graph for the acyclicity check");

  auto* tab = app.add_subcommand("tables", "regenerate the caterpillar sphere-count tables");
  int table_id = 0;
  std::string values_text;
  bool table_check = false;
  tab->add_option("id", table_id, "table number 1, 2 or 3")->required();
  tab->add_option("--values", values_text, "m for table 1, t1..t7 for tables 2 and 3");
  tab->add_flag("--check", table_check, "compare evaluated rows with the homology of the caterpillar");

  auto* swp = app.add_subcommand("sweep", "verify many instances in parallel");
  std::string sweep_family = "caterpillar";
  int max_n = 5, max_leg = 3, count = 20, max_edges = 8, max_t = 2;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  swp->add_option("--family", sweep_family, "caterpillar, polygon-line, honeycomb21, path, cycle, random")
      ->check(CLI::IsMember({"caterpillar", "polygon-line", "honeycomb21", "path", "cycle", "random"}));
  swp->add_option("--max-n", max_n, "largest spine length or path/cycle size");
  swp->add_option("--max-leg", max_leg, "largest leg count");
  swp->add_option("--max-t", max_t, "largest t for honeycomb21");
  swp->add_option("--count", count, "number of random graphs");
  swp->add_option("--max-edges", max_edges, "edge cap for random graphs");
  swp->add_option("--jobs", jobs, "worker threads");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    vopt.order = parse_int_list(order_text);
    vopt.avoid = parse_int_list(avoid_text);
    vopt.face_budget = g.budget();

    if (*gen) {
      const Instance inst = gen_in.load();
      const std::string body = g.json() ? to_json(inst.graph).dump(2) + "\n" : to_edge_list(inst.graph);
      if (gen_out.empty()) {
        out << body;
      } else {
        const std::string tmp = gen_out + ".tmp";
        {
          std::ofstream f(tmp);
          if (!f) fail(ErrorKind::Parse, "cannot write " + gen_out);
          f << body;
        }
        std::rename(tmp.c_str(), gen_out.c_str());
      }
      return 0;
    }

    if (*mta) {
      const Instance inst = mta_in.load();
      const Graph lg = analysis_graph(inst, vopt.on_graph);
      const auto tree = run_mta(lg, *resolve_strategy(inst, vopt));
      const auto rep = critical_cells(tree);
      emit(out, g, to_json(rep), "input: " + inst.label + "\n" + to_text(rep));
      return 0;
    }

    if (*hom) {
      const Instance inst = hom_in.load();
      const auto c = independence_complex(analysis_graph(inst, hom_on_graph), g.budget());
      const auto p = reduced_homology(c, !serial);
      json j = to_json(p);
      json fv = json::array();
      std::string fvt;
      for (auto f : c.f_vector()) {
        fv.push_back(f);
        fvt += (fvt.empty() ? "" : " ") + std::to_string(f);
      }
      j["f_vector"] = fv;
      std::string text = "input: " + inst.label + "\nf-vector (from dim -1): " + fvt + "\n" + to_text(p);
      if (!p.has_torsion()) {
        const auto w = wedge_from_homology(p, false);
        j["wedge_if_forest"] = to_json(w);
        text += "betti numbers of: " + w.to_string() + "\n";
      }
      emit(out, g, j, text);
      return 0;
    }

    if (*hty) {
      if (!m_poly.empty()) {
        const auto v = parse_int_list(m_poly);
        if (v.size() != 2) fail(ErrorKind::Parse, "--M-poly takes n,x");
        const auto p = M_poly(v[0], v[1]);
        emit(out, g, json{{"M", p.to_string()}}, p.to_string() + "\n");
        return 0;
      }
      if (l_poly >= 0) {
        const auto p = L_poly(l_poly);
        const std::string s = p.to_string('a', MonomialOrder::GradedLex);
        emit(out, g, json{{"L", s}}, s + "\n");
        return 0;
      }
      if (!alternating.empty()) {
        const auto w = alternating_caterpillar_wedge(parse_int_list(alternating));
        emit(out, g, to_json(w), w.to_string() + "\n");
        return 0;
      }
      const Instance inst = hty_in.load();
      if (!inst.spec) fail(ErrorKind::InvalidSpec, "homotopy formulas need a family spec, not a graph file");
      const json j = homotopy_json(*inst.spec);
      std::string text = "input: " + inst.label + "\n";
      if (auto w = formula_for(*inst.spec)) text += "homotopy type: " + w->to_string() + "\n";
      if (j.contains("bounds")) text += "bounds: " + j["bounds"].dump() + "\n";
      if (j.contains("connectivity_bound"))
        text += "connected through dimension: " + j["connectivity_bound"].dump() + "\n";
      if (j.contains("symbolic")) text += "symbolic counts: " + j["symbolic"].dump() + "\n";
      if (j.contains("note")) text += j["note"].get<std::string>() + "\n";
      emit(out, g, j, text);
      return 0;
    }

    if (*ver) {
      const Instance inst = ver_in.load();
      const RunReport rep = verify(inst, vopt);
      emit(out, g, to_json(rep, g.timing), to_text(rep, g.timing));
      if (!rep.ok()) {
        std::string names;
        for (const auto& n : rep.failing()) names += " " + n;
        err << "inconsistency: failing checks:" << names << "\n";
        return 1;
      }
      return 0;
    }

    if (*tab) {
      SphereTable t;
      std::vector<BigInt> values;
      for (int v : parse_int_list(values_text)) values.emplace_back(v);
      t = values.empty() ? sphere_table(table_id) : sphere_table_evaluated(table_id, values);
      json j = to_json(t);
      std::string text = t.title + "\n" + t.to_text();
      if (table_check) {
        if (values.empty() || table_id == 1) fail(ErrorKind::InvalidSpec, "--check needs table 2 or 3 with --values");
        bool all_ok = true;
        json checks = json::array();
        const auto patterns = table3_patterns();
        for (int n = 1; n <= 7; ++n) {
          std::vector<int> legs;
          for (int k = 0; k < n; ++k) {
            const bool zero = table_id == 3 && patterns[n - 1][k] == 0;
            legs.push_back(zero ? 0 : static_cast<int>(values[k].get_si()) + 1);
          }
          const spec::Caterpillar cs{legs};
          const auto formula = arbitrary_caterpillar_wedge(legs);
          std::string verdict;
          try {
            const auto c = matching_complex(generate(cs), g.budget());
            const auto w = wedge_from_homology(reduced_homology(c), true);
            verdict = w == formula ? "ok" : "mismatch";
            all_ok = all_ok && w == formula;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::Budget) throw;
            verdict = "skipped (face budget)";
          }
          checks.push_back({{"row", t.rows[n - 1].label}, {"legs", legs}, {"result", verdict}});
          text += "check " + t.rows[n - 1].label + " legs " + join(legs) + ": " + verdict + "\n";
        }
        j["checks"] = checks;
        emit(out, g, j, text);
        return all_ok ? 0 : 1;
      }
      emit(out, g, j, text);
      return 0;
    }

    if (*swp) {
      std::vector<Instance> items;
      if (sweep_family == "caterpillar") {
        for (const auto& legs : caterpillar_lists(max_n, max_leg)) {
          const GeneratorSpec s = spec::Caterpillar{legs};
          items.push_back({describe(s), generate(s), s});
        }
      } else if (sweep_family == "polygon-line") {
        for (auto [n, t] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
          const GeneratorSpec s = spec::PolygonLine{n, t};
          items.push_back({describe(s), generate(s), s});
        }
      } else if (sweep_family == "honeycomb21") {
        for (int t = 1; t <= max_t; ++t) {
          const GeneratorSpec s = spec::Honeycomb{2, 1, t};
          items.push_back({describe(s), generate(s), s});
        }
      } else if (sweep_family == "path" || sweep_family == "cycle") {
        for (int n = sweep_family == "path" ? 2 : 3; n <= max_n; ++n) {
          const GeneratorSpec s = sweep_family == "path" ? GeneratorSpec{spec::Path{n}} : GeneratorSpec{spec::Cycle{n}};
          items.push_back({describe(s), generate(s), s});
        }
      } else {
        std::mt19937_64 rng(g.seed);
        for (int k = 0; k < count; ++k) {
          Graph rg = random_graph(rng, max_edges);
          items.push_back({"random#" + std::to_string(k) + " seed " + std::to_string(g.seed), std::move(rg),
                           std::nullopt});
        }
      }
      const auto results = run_sweep(items, vopt, jobs);
      json arr = json::array();
      std::string text;
      std::size_t ok = 0, failed = 0, skipped = 0;
      for (const auto& r : results) {
        arr.push_back({{"input", r.input}, {"status", r.status}, {"failing", r.failing}, {"details", r.details}});
        text += r.status + " " + r.input;
        for (const auto& f : r.failing) text += " " + f;
        if (!r.details.empty()) text += " (" + r.details + ")";
        text += "\n";
        (r.status == "ok" ? ok : r.status == "fail" ? failed : skipped)++;
      }
      text += "total " + std::to_string(results.size()) + ": " + std::to_string(ok) + " ok, " +
              std::to_string(failed) + " failed, " + std::to_string(skipped) + " skipped\n";
      emit(out, g, json{{"results", arr}, {"ok", ok}, {"failed", failed}, {"skipped", skipped}}, text);
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace mcx::cli
