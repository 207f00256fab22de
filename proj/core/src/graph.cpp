#include "mcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcx/error.hpp"

namespace mcx {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) fail(ErrorKind::InvalidSpec, "negative vertex count");
  adj_.assign(n_, {});
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      fail(ErrorKind::InvalidSpec, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) fail(ErrorKind::InvalidSpec, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) fail(ErrorKind::InvalidSpec, "duplicate edge");
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) fail(ErrorKind::Contract, "invalid vertex id " + std::to_string(v));
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int i = 0; i < n_edges(); ++i)
    if (edges_[i] == Edge{u, v}) return i;
  return -1;
}

bool Graph::edges_incident(int e, int f) const {
  const auto& a = edges_.at(e);
  const auto& b = edges_.at(f);
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

Graph Graph::with_edge_labels(std::vector<int> labels) const {
  if (static_cast<int>(labels.size()) != n_) fail(ErrorKind::Contract, "edge label count must equal vertex count");
  Graph g = *this;
  g.edge_labels_ = std::move(labels);
  return g;
}

Graph Graph::with_vertex_points(std::vector<Point2> pts) const {
  if (static_cast<int>(pts.size()) != n_) fail(ErrorKind::Contract, "point count must equal vertex count");
  Graph g = *this;
  g.vertex_points_ = std::move(pts);
  return g;
}

Graph Graph::with_edge_points(std::vector<Point2> pts) const {
  if (static_cast<int>(pts.size()) != n_edges()) fail(ErrorKind::Contract, "point count must equal edge count");
  Graph g = *this;
  g.edge_points_ = std::move(pts);
  return g;
}

bool Graph::same_structure(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

Graph line_graph(const Graph& g) {
  const int m = g.n_edges();
  std::vector<Edge> out;
  // Edges of the line graph in lexicographic order of (i, j).
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.edges_incident(i, j)) out.emplace_back(i, j);
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  Graph lg = Graph(m, std::move(out)).with_edge_labels(std::move(labels));
  if (g.edge_points()) lg = lg.with_vertex_points(*g.edge_points());
  return lg;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> out = g.neighbors(v);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

Graph wedge_sum(const Graph& g, const Graph& h, int x_g, int x_h) {
  if (x_g < 0 || x_g >= g.n_vertices()) fail(ErrorKind::Contract, "invalid vertex id in wedge_sum");
  if (x_h < 0 || x_h >= h.n_vertices()) fail(ErrorKind::Contract, "invalid vertex id in wedge_sum");
  std::vector<int> map(h.n_vertices());
  int next = g.n_vertices();
  for (int v = 0; v < h.n_vertices(); ++v) map[v] = (v == x_h) ? x_g : next++;
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(map[u], map[v]);
  return Graph(next, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int off = g.n_vertices();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + off, v + off);
  return Graph(off + h.n_vertices(), std::move(edges));
}

bool is_forest(const Graph& g) {
  std::vector<int> parent(g.n_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

int hexagon_row_count(int r, int s, int t, int i) {
  if (r < 1 || s < 1 || t < 1) fail(ErrorKind::InvalidSpec, "honeycomb parameters must be >= 1");
  if (i < 1 || i > r + s - 1) fail(ErrorKind::InvalidSpec, "hexagon row index out of range");
  const int lo = std::min(r, s), hi = std::max(r, s);
  if (i <= lo) return t + i - 1;
  if (i <= hi) return t + lo - 1;
  return t + r + s - 1 - i;
}

int hexagon_count(int r, int s, int t) {
  int total = 0;
  for (int i = 1; i <= r + s - 1; ++i) total += hexagon_row_count(r, s, t, i);
  return total;
}

std::vector<int> polygon_line_a_vertices(int n, int t) {
  std::vector<int> out;
  for (int j = 0; j <= t; ++j) out.push_back(j * (2 * n - 1));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) fail(ErrorKind::Parse, "edge list must start with \"n_vertices m_edges\"");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(is >> u >> v)) fail(ErrorKind::Parse, "edge list truncated at edge " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (is >> extra) fail(ErrorKind::Parse, "trailing data after edge list");
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace mcx
