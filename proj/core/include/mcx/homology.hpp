#pragma once

#include <cstddef>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/complex.hpp"
#include "mcx/wedge.hpp"

namespace mcx {

// Column-sparse integer matrix; each column is sorted by row index.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;

  static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);
  std::vector<std::vector<long long>> to_dense() const;
};

struct SmithResult {
  std::vector<BigInt> invariants;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank() const { return invariants.size(); }
};

// Unit pivots are eliminated sparsely first; whatever remains is reduced
// densely with arbitrary-precision arithmetic using smallest-magnitude pivots.
SmithResult smith_normal_form(const SparseIntMatrix& m);
SmithResult smith_normal_form(const std::vector<std::vector<BigInt>>& dense);

struct BoundaryMatrix {
  int dim = 0;  // columns are dim-faces, rows (dim-1)-faces
  SparseIntMatrix matrix;
};

// For d = 0 the matrix has no rows; the augmentation is separate.
BoundaryMatrix boundary_matrix(const SimplicialComplex& a, int d);
SparseIntMatrix augmentation_matrix(const SimplicialComplex& a);
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct HomologyProfile {
  std::vector<std::size_t> betti;            // reduced, index = dimension >= 0
  std::vector<std::vector<BigInt>> torsion;  // coefficients > 1 per dimension
  bool empty_complex = false;                // the complex {∅}: reduced H_{-1} = Z

  std::size_t betti_at(int d) const { return d >= 0 && d < static_cast<int>(betti.size()) ? betti[d] : 0; }
  bool has_torsion() const;
  long long euler_characteristic() const;  // sum (-1)^d betti_d, including the {∅} term
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& a, bool parallel = true);

// Throws ErrorKind::Inconsistency (forest) or ErrorKind::Contract (otherwise)
// when torsion is present.
WedgeDescriptor wedge_from_homology(const HomologyProfile& p, bool forest_certified);

}  // namespace mcx
