#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mcx {

using Edge = std::pair<int, int>;

// Doubled integer coordinates; used to attach lattice geometry to honeycomb edges.
struct Point2 {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

// Simple undirected graph on vertices 0..n-1. The edge list keeps the order it
// was constructed with; that order is the canonical edge order and becomes the
// vertex order of the line graph.
class Graph {
 public:
  Graph() = default;
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  // Index of edge {u,v} in the canonical order, or -1.
  int edge_index(int u, int v) const;
  bool edges_incident(int e, int f) const;

  // For line graphs: vertex i corresponds to edge edge_labels()[i] of the source.
  const std::optional<std::vector<int>>& edge_labels() const { return edge_labels_; }
  const std::optional<std::vector<Point2>>& vertex_points() const { return vertex_points_; }
  const std::optional<std::vector<Point2>>& edge_points() const { return edge_points_; }

  Graph with_edge_labels(std::vector<int> labels) const;
  Graph with_vertex_points(std::vector<Point2> pts) const;
  Graph with_edge_points(std::vector<Point2> pts) const;

  // Same vertex set and edge order; metadata ignored.
  bool same_structure(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<std::vector<int>> edge_labels_;
  std::optional<std::vector<Point2>> vertex_points_;
  std::optional<std::vector<Point2>> edge_points_;
};

namespace spec {
struct Path { int n; };
struct Cycle { int n; };
struct Caterpillar { std::vector<int> legs; };
struct PerfectCaterpillar { int m; int n; };
struct OneChildTree { int i; };
struct PerfectBinaryTree { int h; };
struct AntennaTree { int h; };
struct PolygonLine { int n; int t; };
struct Honeycomb { int r; int s; int t; };
}  // namespace spec

using GeneratorSpec = std::variant<spec::Path, spec::Cycle, spec::Caterpillar, spec::PerfectCaterpillar,
                                   spec::OneChildTree, spec::PerfectBinaryTree, spec::AntennaTree,
                                   spec::PolygonLine, spec::Honeycomb>;

// Throws ErrorKind::InvalidSpec when parameters are out of range.
void validate(const GeneratorSpec& s);
Graph generate(const GeneratorSpec& s);
std::string describe(const GeneratorSpec& s);
// "honeycomb:1,1,2", "caterpillar:2,0,3", "path:5", ... Throws ErrorKind::Parse.
GeneratorSpec parse_spec(const std::string& text);
bool is_forest_family(const GeneratorSpec& s);

Graph line_graph(const Graph& g);
std::vector<int> closed_neighborhood(const Graph& g, int v);
// Disjoint union of g and h with x_h glued onto x_g. Vertices of h other than
// x_h are renumbered after those of g, keeping their relative order.
Graph wedge_sum(const Graph& g, const Graph& h, int x_g, int x_h);
Graph disjoint_union(const Graph& g, const Graph& h);
bool is_forest(const Graph& g);

// Number of hexagons in row i (1-based) of an r x s x t honeycomb.
int hexagon_row_count(int r, int s, int t, int i);
int hexagon_count(int r, int s, int t);

// Line-graph vertex indices of the edges a_1..a_{t+1} of PolygonLine(n,t).
std::vector<int> polygon_line_a_vertices(int n, int t);

// Text edge list: "n m" then one "u v" per line in stored order.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace mcx
