#include <algorithm>
#include <array>
#include <set>

#include "mcx/error.hpp"
#include "mcx/mta.hpp"

namespace mcx {
namespace {

int lowest(const SplitContext& ctx) { return ctx.remaining.front(); }

class Lexicographic final : public SplitStrategy {
 public:
  std::string name() const override { return "lexicographic"; }
  int choose(const SplitContext& ctx, std::vector<std::string>&) const override { return lowest(ctx); }
};

// First listed vertex still undecided, else the lowest one.
class ListOrder final : public SplitStrategy {
 public:
  ListOrder(std::string name, std::vector<int> order) : name_(std::move(name)), order_(std::move(order)) {}
  std::string name() const override { return name_; }
  int choose(const SplitContext& ctx, std::vector<std::string>& warnings) const override {
    for (int v : order_)
      if (std::binary_search(ctx.remaining.begin(), ctx.remaining.end(), v)) return v;
    warnings.push_back(name_ + ": no listed vertex left; split on lowest index " + std::to_string(lowest(ctx)));
    return lowest(ctx);
  }

 private:
  std::string name_;
  std::vector<int> order_;
};

class AvoidSet final : public SplitStrategy {
 public:
  explicit AvoidSet(std::vector<int> avoid) : avoid_(avoid.begin(), avoid.end()) {}
  std::string name() const override { return "avoid"; }
  int choose(const SplitContext& ctx, std::vector<std::string>&) const override {
    for (int v : ctx.remaining)
      if (!avoid_.count(v)) return v;
    fail(ErrorKind::Inconsistency, "every undecided vertex is in the avoid set");
  }

 private:
  std::set<int> avoid_;
};

// Doubled lattice coordinates of line-graph vertices of a 2 x 1 x t
// honeycomb: three dense rows (y = 0, 2, 4; odd x) and two sparse rows
// (y = 3: x = 0 mod 4; y = 1: x = 2 mod 4).
struct CaseTemplate {
  Point2 split;
  std::set<Point2> points;
};

bool on_lattice(int x, int y) {
  const int m4 = ((x % 4) + 4) % 4;
  switch (y) {
    case 0:
    case 2:
    case 4: return (m4 % 2) == 1;
    case 3: return m4 == 0;
    case 1: return m4 == 2;
    default: return false;
  }
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  if ((p.x - a.x) * (b.y - a.y) != (p.y - a.y) * (b.x - a.x)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

using Segment = std::array<Point2, 2>;

CaseTemplate make_template(Point2 split, std::initializer_list<Segment> segs) {
  CaseTemplate t{split, {}};
  for (int y = 0; y <= 4; ++y)
    for (int x = -4; x <= 16; ++x) {
      if (!on_lattice(x, y)) continue;
      for (const auto& s : segs)
        if (on_segment({x, y}, s[0], s[1])) {
          t.points.insert({x, y});
          break;
        }
    }
  if (!t.points.count(split)) fail(ErrorKind::Inconsistency, "case template misses its splitting vertex");
  return t;
}

// Solid segments of the six configurations; the first point is the bold
// splitting vertex. The strip continues regularly to the right.
const std::vector<CaseTemplate>& case_templates() {
  static const std::vector<CaseTemplate> cases = {
      make_template({1, 2}, {{{{1, 4}, {11, 4}}}, {{{1, 2}, {13, 2}}}, {{{3, 0}, {15, 0}}}, {{{0, 3}, {3, 0}}},
                             {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{0, 3}, {1, 4}}},
                             {{{2, 1}, {5, 4}}}, {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
      make_template({-1, 4}, {{{{-1, 4}, {11, 4}}}, {{{1, 2}, {13, 2}}}, {{{3, 0}, {15, 0}}}, {{{-1, 4}, {3, 0}}},
                              {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{0, 3}, {1, 4}}},
                              {{{2, 1}, {5, 4}}}, {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
      make_template({3, 2}, {{{{3, 4}, {11, 4}}}, {{{1, 2}, {13, 2}}}, {{{3, 0}, {15, 0}}}, {{{1, 2}, {3, 0}}},
                             {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{2, 1}, {5, 4}}},
                             {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
      make_template({1, 0}, {{{{-1, 4}, {11, 4}}}, {{{1, 2}, {13, 2}}}, {{{1, 0}, {15, 0}}}, {{{-1, 4}, {3, 0}}},
                             {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{0, 3}, {1, 4}}},
                             {{{1, 0}, {5, 4}}}, {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
      make_template({0, 3}, {{{{-1, 4}, {11, 4}}}, {{{1, 2}, {13, 2}}}, {{{5, 0}, {15, 0}}}, {{{-1, 4}, {1, 2}}},
                             {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{0, 3}, {1, 4}}},
                             {{{3, 2}, {5, 4}}}, {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
      make_template({-1, 4}, {{{{-1, 4}, {11, 4}}}, {{{-1, 2}, {13, 2}}}, {{{1, 0}, {15, 0}}}, {{{-1, 4}, {3, 0}}},
                              {{{3, 4}, {7, 0}}}, {{{7, 4}, {11, 0}}}, {{{11, 4}, {15, 0}}}, {{{-1, 2}, {1, 4}}},
                              {{{1, 0}, {5, 4}}}, {{{5, 0}, {9, 4}}}, {{{9, 0}, {12, 3}}}, {{{13, 0}, {14, 1}}}}),
  };
  return cases;
}

// Width of the comparison window, doubled units.
constexpr int kWindow = 6;

std::set<int> local_neighbors(const Graph& g, int v, const std::set<int>& s) {
  std::set<int> out;
  for (int w : g.neighbors(v))
    if (s.count(w)) out.insert(w);
  return out;
}

// End-of-strip configurations: a triangle, a hexagon, or a hexagon with one
// or two triangles attached along edges.
std::optional<int> terminal_rule(const Graph& g, const std::vector<int>& rem) {
  const std::set<int> s(rem.begin(), rem.end());
  if (rem.size() == 3 && g.adjacent(rem[0], rem[1]) && g.adjacent(rem[1], rem[2]) && g.adjacent(rem[0], rem[2]))
    return rem[0];
  std::vector<int> apex, core;
  for (int v : rem) {
    const auto nb = local_neighbors(g, v, s);
    if (nb.size() == 2 && g.adjacent(*nb.begin(), *nb.rbegin()))
      apex.push_back(v);
    else
      core.push_back(v);
  }
  const std::set<int> cs(core.begin(), core.end());
  if (core.size() != 6) return std::nullopt;
  for (int v : core)
    if (local_neighbors(g, v, cs).size() != 2) return std::nullopt;
  std::set<int> seen{core[0]};
  std::vector<int> stack{core[0]};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : local_neighbors(g, u, cs))
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != 6) return std::nullopt;
  if (apex.empty()) return core.front();
  if (apex.size() == 1) {
    const auto tri = local_neighbors(g, apex[0], s);
    for (int v : core)
      if (!tri.count(v) && (g.adjacent(v, *tri.begin()) || g.adjacent(v, *tri.rbegin()))) return v;
    return std::nullopt;
  }
  if (apex.size() == 2) {
    std::set<int> tri = local_neighbors(g, apex[0], s);
    for (int v : local_neighbors(g, apex[1], s)) tri.insert(v);
    return *tri.begin();
  }
  return std::nullopt;
}

class Honeycomb21Cases final : public SplitStrategy {
 public:
  std::string name() const override { return "honeycomb21"; }
  int choose(const SplitContext& ctx, std::vector<std::string>& warnings) const override {
    const auto& vp = ctx.g.vertex_points();
    if (!vp || static_cast<int>(vp->size()) != ctx.g.n_vertices())
      fail(ErrorKind::Contract, "honeycomb21 strategy needs lattice points on the graph vertices");
    int min_x = vp->front().x, max_y = vp->front().y;
    for (const auto& p : *vp) {
      min_x = std::min(min_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    auto place = [&](int v) { return Point2{(*vp)[v].x - min_x, max_y - (*vp)[v].y}; };
    std::set<Point2> ambient;
    for (int v = 0; v < ctx.g.n_vertices(); ++v) ambient.insert(place(v));
    std::map<Point2, int> config;
    for (int v : ctx.remaining) config.emplace(place(v), v);
    int cmin = config.begin()->first.x;
    for (const auto& [p, v] : config) cmin = std::min(cmin, p.x);
    std::set<Point2> window;
    for (const auto& [p, v] : config)
      if (p.x <= cmin + kWindow) window.insert(p);

    for (const auto& tpl : case_templates()) {
      for (bool reflect : {false, true}) {
        auto map_pt = [&](Point2 p) { return reflect ? Point2{p.x, 4 - p.y} : p; };
        int tmin = tpl.points.begin()->x;
        for (const auto& p : tpl.points) tmin = std::min(tmin, p.x);
        const int dx = cmin - tmin;
        std::set<Point2> expected;
        for (const auto& p : tpl.points) {
          Point2 q = map_pt(p);
          q.x += dx;
          if (q.x <= cmin + kWindow && ambient.count(q)) expected.insert(q);
        }
        Point2 sv = map_pt(tpl.split);
        sv.x += dx;
        if (expected == window && config.count(sv)) return config.at(sv);
      }
    }
    if (auto v = terminal_rule(ctx.g, ctx.remaining)) return *v;
    std::string pts;
    for (const auto& [p, v] : config) pts += " " + std::to_string(v);
    warnings.push_back("honeycomb21: no case matched configuration {" + pts + " }; split on lowest index");
    return lowest(ctx);
  }
};

}  // namespace

StrategyPtr lexicographic_strategy() { return std::make_shared<Lexicographic>(); }
StrategyPtr smallest_aj_strategy(std::vector<int> a_vertices) {
  return std::make_shared<ListOrder>("smallest-aj", std::move(a_vertices));
}
StrategyPtr smallest_aj_strategy_for(int n, int t) { return smallest_aj_strategy(polygon_line_a_vertices(n, t)); }
StrategyPtr honeycomb21_strategy() { return std::make_shared<Honeycomb21Cases>(); }
StrategyPtr avoid_set_strategy(std::vector<int> avoid) { return std::make_shared<AvoidSet>(std::move(avoid)); }
StrategyPtr forced_order_strategy(std::vector<int> order) {
  return std::make_shared<ListOrder>("forced", std::move(order));
}
std::vector<std::string> strategy_names() { return {"lexicographic", "smallest-aj", "honeycomb21", "forced", "avoid"}; }

}  // namespace mcx
