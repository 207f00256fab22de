#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcx/graph.hpp"

namespace mcx {

// A face is a bitmask over a vertex universe of at most 64 vertices.
using FaceMask = std::uint64_t;
constexpr int kMaxUniverse = 64;
constexpr std::size_t kDefaultFaceBudget = 5'000'000;

inline int face_size(FaceMask f) { return std::popcount(f); }
inline int face_dim(FaceMask f) { return std::popcount(f) - 1; }
std::vector<int> face_vertices(FaceMask f);
FaceMask face_mask(const std::vector<int>& vertices);
// Lexicographic order of the sorted vertex sequences; faces of equal size.
inline bool face_lex_less(FaceMask a, FaceMask b) {
  const FaceMask x = a ^ b;
  return x != 0 && (a & (x & (~x + 1))) != 0;
}

// Explicit face list, closed under taking subsets, always containing the
// empty face. Faces are stored per dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex();  // {∅} on an empty universe
  // Faces may come in any order and with repeats; closure is verified.
  SimplicialComplex(int universe, std::vector<FaceMask> faces, std::size_t budget = kDefaultFaceBudget);
  static SimplicialComplex from_facets(int universe, const std::vector<std::vector<int>>& facets,
                                       std::size_t budget = kDefaultFaceBudget);

  int universe() const { return universe_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  std::size_t face_count() const { return total_; }
  // d >= -1; empty vector above the top dimension.
  const std::vector<FaceMask>& faces(int d) const;
  std::vector<FaceMask> all_faces() const;
  // f_{-1}, f_0, ..., f_dim
  std::vector<std::size_t> f_vector() const;
  long long reduced_euler_characteristic() const;
  bool contains(FaceMask f) const { return index_of(f) >= 0; }
  long index_of(FaceMask f) const;
  std::vector<FaceMask> facets() const;
  std::vector<int> vertices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_ == b.universe_ && a.by_dim_ == b.by_dim_;
  }

 private:
  int universe_ = 0;
  std::size_t total_ = 0;
  std::vector<std::vector<FaceMask>> by_dim_;  // index d+1
};

SimplicialComplex independence_complex(const Graph& g, std::size_t budget = kDefaultFaceBudget);
// Vertex i of the result is edge i of g in canonical edge order.
SimplicialComplex matching_complex(const Graph& g, std::size_t budget = kDefaultFaceBudget);

// Universe of b is shifted past that of a.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       std::size_t budget = kDefaultFaceBudget);
SimplicialComplex cone(const SimplicialComplex& a, std::size_t budget = kDefaultFaceBudget);
SimplicialComplex suspension(const SimplicialComplex& a, std::size_t budget = kDefaultFaceBudget);

// mc must be matching_complex(g). The new edge e becomes vertex `position` of
// the result (default: appended last); later vertices shift up by one.
SimplicialComplex complex_add_edge(const SimplicialComplex& mc, const Graph& g, Edge e,
                                   std::optional<int> position = std::nullopt,
                                   std::size_t budget = kDefaultFaceBudget);
// Removes every face containing vertex e and closes the gap in the universe,
// so the result equals matching_complex(g minus edge e).
SimplicialComplex complex_delete_edge(const SimplicialComplex& mc, int e);

struct DiameterResult {
  bool connected = true;
  int diameter = 0;  // meaningful only when connected
};
DiameterResult one_skeleton_diameter(const SimplicialComplex& a);

// Smallest (lexicographic on sorted edge indices) nonempty proper edge set S
// with every edge outside S incident to every edge of S, if one exists.
std::optional<std::vector<int>> disconnection_witness(const Graph& g);

}  // namespace mcx
