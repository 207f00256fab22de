#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "mcx/error.hpp"
#include "mcx/graph.hpp"

namespace mcx {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::InvalidSpec, msg);
}

Graph sorted_graph(int n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

Graph caterpillar(const std::vector<int>& legs) {
  const int n = static_cast<int>(legs.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < legs[i]; ++k) edges.emplace_back(i, next++);
  return sorted_graph(next, std::move(edges));
}

Graph perfect_binary_tree(int h) {
  const int n = (1 << (h + 1)) - 1;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return sorted_graph(n, std::move(edges));
}

// Two paths u_0..u_L and w_0..w_L, L = (n-1)t, joined by rungs a_j. Edge order
// per block j: a_j, b_{j,1..n-1} (top), c_{j,1..n-1} (bottom); then a_{t+1}.
Graph polygon_line(int n, int t) {
  const int L = (n - 1) * t;
  auto u = [](int i) { return i; };
  auto w = [L](int i) { return L + 1 + i; };
  std::vector<Edge> edges;
  for (int j = 0; j < t; ++j) {
    const int base = j * (n - 1);
    edges.emplace_back(u(base), w(base));
    for (int k = 0; k < n - 1; ++k) edges.emplace_back(u(base + k), u(base + k + 1));
    for (int k = 0; k < n - 1; ++k) edges.emplace_back(w(base + k), w(base + k + 1));
  }
  edges.emplace_back(u(L), w(L));
  return Graph(2 * L + 2, std::move(edges));
}

// The honeycomb graph is the dual of the triangles of a hexagonal region of the
// triangular lattice. Lattice rows y = 0..r+s run downward; x is doubled so
// lattice points in a row share parity.
Graph honeycomb(int r, int s, int t) {
  const int rows = r + s;
  auto xl = [&](int y) { return -std::min(y, s) + std::max(0, y - s); };
  auto xr = [&](int y) { return 2 * t + std::min(y, r) - std::max(0, y - r); };
  auto inside = [&](int x, int y) {
    if (y < 0 || y > rows) return false;
    return x >= xl(y) && x <= xr(y) && ((x - xl(y)) % 2 == 0);
  };
  using P = std::pair<int, int>;  // (x, y)
  struct Tri {
    P key;  // (centroid x, 3*centroid y) ordering key
    std::array<P, 3> corners;
  };
  std::vector<Tri> tris;
  for (int y = 0; y <= rows; ++y)
    for (int x = xl(y); x <= xr(y); x += 2) {
      if (inside(x + 2, y) && inside(x + 1, y + 1))
        tris.push_back({{x + 1, 3 * y + 1}, {P{x, y}, P{x + 2, y}, P{x + 1, y + 1}}});
      if (inside(x - 1, y + 1) && inside(x + 1, y + 1))
        tris.push_back({{x, 3 * y + 2}, {P{x, y}, P{x - 1, y + 1}, P{x + 1, y + 1}}});
    }
  // Row-major labeling, top to bottom then left to right.
  std::sort(tris.begin(), tris.end(), [](const Tri& a, const Tri& b) {
    return std::pair(a.key.second, a.key.first) < std::pair(b.key.second, b.key.first);
  });
  std::map<std::pair<P, P>, std::vector<int>> by_side;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const auto& c = tris[i].corners;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) by_side[std::minmax(c[a], c[b])].push_back(i);
  }
  struct E {
    Point2 mid;
    Edge e;
  };
  std::vector<E> es;
  for (const auto& [side, owners] : by_side) {
    if (owners.size() != 2) continue;
    Point2 mid{side.first.first + side.second.first, side.first.second + side.second.second};
    es.push_back({mid, std::minmax(owners[0], owners[1])});
  }
  // Column-major by edge midpoint: left to right, then top to bottom.
  std::sort(es.begin(), es.end(), [](const E& a, const E& b) {
    return std::pair(a.mid.x, a.mid.y) < std::pair(b.mid.x, b.mid.y);
  });
  std::vector<Edge> edges;
  std::vector<Point2> pts;
  for (const auto& e : es) {
    edges.push_back(e.e);
    pts.push_back(e.mid);
  }
  return Graph(static_cast<int>(tris.size()), std::move(edges)).with_edge_points(std::move(pts));
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "expected an integer, got \"" + item + "\"");
    }
    if (pos != item.size()) fail(ErrorKind::Parse, "expected an integer, got \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

}  // namespace

void validate(const GeneratorSpec& s) {
  std::visit(overloaded{
                 [](const spec::Path& p) { require(p.n >= 2, "Path needs n >= 2"); },
                 [](const spec::Cycle& p) { require(p.n >= 3, "Cycle needs n >= 3"); },
                 [](const spec::Caterpillar& p) {
                   require(!p.legs.empty(), "Caterpillar needs at least one spine vertex");
                   for (int m : p.legs) require(m >= 0, "Caterpillar leg counts must be >= 0");
                 },
                 [](const spec::PerfectCaterpillar& p) {
                   require(p.n >= 1, "PerfectCaterpillar needs n >= 1");
                   require(p.m >= 0, "PerfectCaterpillar needs m >= 0");
                 },
                 [](const spec::OneChildTree& p) { require(p.i >= 1, "OneChildTree needs i >= 1"); },
                 [](const spec::PerfectBinaryTree& p) {
                   require(p.h >= 1 && p.h <= 24, "PerfectBinaryTree needs 1 <= h <= 24");
                 },
                 [](const spec::AntennaTree& p) { require(p.h >= 1 && p.h <= 24, "AntennaTree needs 1 <= h <= 24"); },
                 [](const spec::PolygonLine& p) {
                   require(p.n >= 2 && p.t >= 1, "PolygonLine needs n >= 2 and t >= 1");
                 },
                 [](const spec::Honeycomb& p) {
                   require(p.r >= 1 && p.s >= 1 && p.t >= 1, "Honeycomb needs r, s, t >= 1");
                 },
             },
             s);
}

Graph generate(const GeneratorSpec& s) {
  validate(s);
  return std::visit(
      overloaded{
          [](const spec::Path& p) {
            std::vector<Edge> e;
            for (int i = 0; i + 1 < p.n; ++i) e.emplace_back(i, i + 1);
            return Graph(p.n, std::move(e));
          },
          [](const spec::Cycle& p) {
            std::vector<Edge> e;
            for (int i = 0; i + 1 < p.n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(0, p.n - 1);
            return sorted_graph(p.n, std::move(e));
          },
          [](const spec::Caterpillar& p) { return caterpillar(p.legs); },
          [](const spec::PerfectCaterpillar& p) { return caterpillar(std::vector<int>(p.n, p.m)); },
          [](const spec::OneChildTree& p) {
            // Each new 2-path hangs off the middle of the previous one, so T_i is
            // the caterpillar with legs (2, 1, ..., 1) on an i-vertex spine.
            std::vector<int> legs(p.i, 1);
            legs[0] = 2;
            return caterpillar(legs);
          },
          [](const spec::PerfectBinaryTree& p) { return perfect_binary_tree(p.h); },
          [](const spec::AntennaTree& p) {
            Graph t = perfect_binary_tree(p.h);
            std::vector<Edge> e = t.edges();
            e.emplace_back(0, t.n_vertices());
            return sorted_graph(t.n_vertices() + 1, std::move(e));
          },
          [](const spec::PolygonLine& p) { return polygon_line(p.n, p.t); },
          [](const spec::Honeycomb& p) { return honeycomb(p.r, p.s, p.t); },
      },
      s);
}

std::string describe(const GeneratorSpec& s) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  return std::visit(overloaded{
                        [](const spec::Path& p) { return "path:" + std::to_string(p.n); },
                        [](const spec::Cycle& p) { return "cycle:" + std::to_string(p.n); },
                        [&](const spec::Caterpillar& p) { return "caterpillar:" + join(p.legs); },
                        [&](const spec::PerfectCaterpillar& p) {
                          return "perfect-caterpillar:" + join({p.m, p.n});
                        },
                        [](const spec::OneChildTree& p) { return "one-child-tree:" + std::to_string(p.i); },
                        [](const spec::PerfectBinaryTree& p) {
                          return "perfect-binary-tree:" + std::to_string(p.h);
                        },
                        [](const spec::AntennaTree& p) { return "antenna-tree:" + std::to_string(p.h); },
                        [&](const spec::PolygonLine& p) { return "polygon-line:" + join({p.n, p.t}); },
                        [&](const spec::Honeycomb& p) { return "honeycomb:" + join({p.r, p.s, p.t}); },
                    },
                    s);
}

GeneratorSpec parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "spec must look like family:params, got \"" + text + "\"");
  const std::string fam = text.substr(0, colon);
  const std::vector<int> v = parse_ints(text.substr(colon + 1));
  auto arity = [&](size_t k) {
    if (v.size() != k)
      fail(ErrorKind::Parse, fam + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(v.size()));
  };
  GeneratorSpec s;
  if (fam == "path") {
    arity(1);
    s = spec::Path{v[0]};
  } else if (fam == "cycle") {
    arity(1);
    s = spec::Cycle{v[0]};
  } else if (fam == "caterpillar") {
    s = spec::Caterpillar{v};
  } else if (fam == "perfect-caterpillar") {
    arity(2);
    s = spec::PerfectCaterpillar{v[0], v[1]};
  } else if (fam == "one-child-tree") {
    arity(1);
    s = spec::OneChildTree{v[0]};
  } else if (fam == "perfect-binary-tree") {
    arity(1);
    s = spec::PerfectBinaryTree{v[0]};
  } else if (fam == "antenna-tree") {
    arity(1);
    s = spec::AntennaTree{v[0]};
  } else if (fam == "polygon-line") {
    arity(2);
    s = spec::PolygonLine{v[0], v[1]};
  } else if (fam == "honeycomb") {
    arity(3);
    s = spec::Honeycomb{v[0], v[1], v[2]};
  } else {
    fail(ErrorKind::Parse, "unknown family \"" + fam + "\"");
  }
  return s;
}

bool is_forest_family(const GeneratorSpec& s) {
  return std::holds_alternative<spec::Path>(s) || std::holds_alternative<spec::Caterpillar>(s) ||
         std::holds_alternative<spec::PerfectCaterpillar>(s) || std::holds_alternative<spec::OneChildTree>(s) ||
         std::holds_alternative<spec::PerfectBinaryTree>(s) || std::holds_alternative<spec::AntennaTree>(s);
}

}  // namespace mcx
