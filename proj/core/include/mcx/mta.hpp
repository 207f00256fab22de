#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/graph.hpp"

namespace mcx {

using VertexSet = boost::dynamic_bitset<>;

enum class NodeKind { Internal, LeafCritical, LeafEmpty };
enum class StepKind { None, Free, Pivot, Split };

// Node Σ(A,B): the independent sets containing A and missing B.
struct MtaNode {
  VertexSet A;
  VertexSet B;
  NodeKind kind = NodeKind::Internal;
  StepKind step = StepKind::None;  // step applied at this node
  int v = -1;                      // free vertex, pivot or splitting vertex
  int w = -1;                      // matching vertex of a pivot step
  int parent = -1;
  int side = -1;                   // 0 = left, 1 = right child of a split
  std::vector<int> children;       // left before right
};

struct MatchingTree {
  int n_vertices = 0;
  std::vector<MtaNode> nodes;  // nodes[0] is the root Σ(∅,∅); preorder
  std::string strategy;
  std::vector<std::string> warnings;
};

// State handed to a strategy at a split-ready node.
struct SplitContext {
  const Graph& g;
  const VertexSet& A;
  const VertexSet& B;
  const std::vector<int>& remaining;  // V \ (A ∪ B), ascending
};

class SplitStrategy {
 public:
  virtual ~SplitStrategy() = default;
  virtual std::string name() const = 0;
  // Must return a member of ctx.remaining. Warnings are appended to the report.
  virtual int choose(const SplitContext& ctx, std::vector<std::string>& warnings) const = 0;
};

using StrategyPtr = std::shared_ptr<const SplitStrategy>;

StrategyPtr lexicographic_strategy();
// Splits on the smallest listed vertex still undecided (the a_j of a polygon
// line), falling back to the lowest index.
StrategyPtr smallest_aj_strategy(std::vector<int> a_vertices);
StrategyPtr smallest_aj_strategy_for(int n, int t);
// Requires vertex_points on the graph (line graph of a 2 x 1 x t honeycomb).
StrategyPtr honeycomb21_strategy();
StrategyPtr avoid_set_strategy(std::vector<int> avoid);
// Splits on the first listed vertex still undecided.
StrategyPtr forced_order_strategy(std::vector<int> order);
// Names: lexicographic, smallest-aj, honeycomb21, forced, avoid.
std::vector<std::string> strategy_names();

MatchingTree run_mta(const Graph& g, const SplitStrategy& strategy);

struct CriticalReport {
  std::vector<std::vector<int>> critical;  // A-sets, ascending, in tree order
  std::map<int, std::size_t> histogram;    // dimension |A|-1 -> count
  std::optional<int> d_min_observed;
  std::optional<int> d_max_observed;
  std::size_t empty_leaf_count = 0;
  std::string strategy;
  std::vector<std::string> warnings;

  long long euler_characteristic() const;  // sum (-1)^d c_d
  std::optional<std::size_t> min_size() const;
};

CriticalReport critical_cells(const MatchingTree& tree);

enum class PrepareStatus { SplitReady, EmptyLeaf, Critical };
struct PrepareResult {
  VertexSet A;
  VertexSet B;
  PrepareStatus status = PrepareStatus::SplitReady;
  std::size_t pivots = 0;
};

// Applies free-vertex and pivot steps until the node is split ready. Without
// rng the lowest-index pivot is taken; with rng a uniformly random one.
PrepareResult split_prepare(const Graph& g, VertexSet A, VertexSet B, std::mt19937_64* rng = nullptr);

// Element pairing on the face poset of Ind(g) implied by the tree.
struct MorseMatching {
  std::vector<std::pair<FaceMask, FaceMask>> pairs;  // (lower, upper)
  std::vector<FaceMask> unmatched;
  bool empty_face_paired = false;
};

constexpr int kMorseMatchingGate = 20;
MorseMatching induced_morse_matching(const Graph& g, const MatchingTree& tree, int max_vertices = kMorseMatchingGate,
                                     std::size_t budget = kDefaultFaceBudget);
// True iff the modified Hasse diagram (matched covers upward, all other
// covers downward) has no directed cycle. Throws ErrorKind::Contract if the
// pairs are not covers of c or reuse a face.
bool verify_acyclic(const MorseMatching& m, const SimplicialComplex& c);

struct LowerBoundResult {
  std::optional<std::size_t> min_critical_size;  // empty when no critical cells
  std::size_t bound = 0;
  bool holds = true;
  CriticalReport report;
};
// Throws ErrorKind::Contract when the closed neighborhoods overlap.
LowerBoundResult lower_bound_check(const Graph& g, const std::vector<int>& seeds);

std::vector<int> to_vector(const VertexSet& s);

}  // namespace mcx
