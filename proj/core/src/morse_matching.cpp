#include <algorithm>
#include <unordered_map>

#include "mcx/error.hpp"
#include "mcx/mta.hpp"

namespace mcx {

MorseMatching induced_morse_matching(const Graph& g, const MatchingTree& tree, int max_vertices,
                                     std::size_t budget) {
  if (g.n_vertices() > max_vertices)
    fail(ErrorKind::Budget, "induced matching is limited to " + std::to_string(max_vertices) + " vertices");
  if (tree.nodes.empty() || tree.n_vertices != g.n_vertices()) fail(ErrorKind::Contract, "tree does not match graph");
  const SimplicialComplex ind = independence_complex(g, budget);
  MorseMatching m;
  for (FaceMask face : ind.all_faces()) {
    int node = 0;
    for (;;) {
      const auto& nd = tree.nodes[node];
      if (nd.kind == NodeKind::LeafCritical) {
        m.unmatched.push_back(face);
        break;
      }
      if (nd.kind == NodeKind::LeafEmpty) fail(ErrorKind::Inconsistency, "a face reached an empty leaf");
      const FaceMask bit = FaceMask{1} << nd.v;
      bool pair_here = false;
      switch (nd.step) {
        case StepKind::Free:
          pair_here = true;
          break;
        case StepKind::Pivot:
          if (!(face >> nd.w & 1))
            pair_here = true;
          else
            node = nd.children[0];
          break;
        case StepKind::Split:
          node = nd.children[(face & bit) ? 1 : 0];
          break;
        case StepKind::None:
          fail(ErrorKind::Inconsistency, "unprocessed internal node");
      }
      if (pair_here) {
        // Record each pair once, from its lower face.
        if (!(face & bit)) {
          m.pairs.emplace_back(face, face | bit);
          if (face == 0) m.empty_face_paired = true;
        }
        break;
      }
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end(), [](const auto& a, const auto& b) {
    return face_size(a.first) != face_size(b.first) ? face_size(a.first) < face_size(b.first)
                                                    : face_lex_less(a.first, b.first);
  });
  return m;
}

bool verify_acyclic(const MorseMatching& m, const SimplicialComplex& c) {
  const auto faces = c.all_faces();
  std::unordered_map<FaceMask, int> id;
  for (std::size_t i = 0; i < faces.size(); ++i) id.emplace(faces[i], static_cast<int>(i));
  std::vector<FaceMask> partner_up(faces.size(), 0);
  std::vector<bool> used(faces.size(), false);
  for (const auto& [lo, hi] : m.pairs) {
    auto a = id.find(lo), b = id.find(hi);
    if (a == id.end() || b == id.end()) fail(ErrorKind::Contract, "matched face not in the complex");
    if ((lo & hi) != lo || face_size(hi) != face_size(lo) + 1) fail(ErrorKind::Contract, "matched pair is not a cover");
    if (used[a->second] || used[b->second]) fail(ErrorKind::Contract, "face matched twice");
    used[a->second] = used[b->second] = true;
    partner_up[a->second] = hi;
  }
  // Successors: matched covers go up, every other cover goes down.
  auto successors = [&](int i, std::vector<int>& out) {
    out.clear();
    const FaceMask f = faces[i];
    if (used[i] && partner_up[i] != 0) out.push_back(id.at(partner_up[i]));
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      const FaceMask sub = f & ~(rest & (~rest + 1));
      const int j = id.at(sub);
      if (partner_up[j] == f) continue;
      out.push_back(j);
    }
  };
  std::vector<char> color(faces.size(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> buf;
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (color[s]) continue;
    std::vector<std::pair<int, std::vector<int>>> stack;
    successors(static_cast<int>(s), buf);
    stack.emplace_back(static_cast<int>(s), buf);
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next.empty()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const int v = next.back();
      next.pop_back();
      if (color[v] == 1) return false;
      if (color[v] == 0) {
        color[v] = 1;
        successors(v, buf);
        stack.emplace_back(v, buf);
      }
    }
  }
  return true;
}

}  // namespace mcx
