#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"
#include "mcx/mta.hpp"
#include "mcx/tables.hpp"
#include "mcx/wedge.hpp"

namespace mcx::cli {

using nlohmann::json;

struct Instance {
  std::string label;
  Graph graph;
  std::optional<GeneratorSpec> spec;
};

struct Check {
  std::string name;
  std::string lhs;
  std::string comparison;
  std::string rhs;
  bool pass = false;
  std::string details;
};

struct RunReport {
  std::string input;
  json stages = json::object();
  std::vector<Check> checks;
  std::map<std::string, double> timing_ms;

  bool ok() const;
  std::vector<std::string> failing() const;
};

struct VerifyOptions {
  std::string strategy;  // empty: family default
  std::vector<int> order;
  std::vector<int> avoid;
  std::size_t face_budget = kDefaultFaceBudget;
  int acyclic_gate = kMorseMatchingGate;
  bool on_graph = false;  // analyze Ind(G) instead of M(G) = Ind(L(G))
};

Instance load_instance(const std::string& spec_or_empty, const std::string& graph_file);
// The graph whose independence complex is analyzed.
Graph analysis_graph(const Instance& inst, bool on_graph);
StrategyPtr resolve_strategy(const Instance& inst, const VerifyOptions& opt);
// Closed-form homotopy type where the family has one.
std::optional<WedgeDescriptor> formula_for(const GeneratorSpec& s);
// Every applicable formula or bound, as JSON.
json homotopy_json(const GeneratorSpec& s);

RunReport verify(const Instance& inst, const VerifyOptions& opt);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);
json to_json(const SimplicialComplex& c);
json to_json(const CriticalReport& r);
json to_json(const HomologyProfile& p);
json to_json(const WedgeDescriptor& w);
json to_json(const BoundsResult& b);
json to_json(const SphereTable& t);
json to_json(const RunReport& r, bool with_timing);

std::string to_text(const CriticalReport& r);
std::string to_text(const HomologyProfile& p);
std::string to_text(const RunReport& r, bool with_timing);

std::string join(const std::vector<int>& v, const char* sep = ",");

}  // namespace mcx::cli
