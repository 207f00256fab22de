#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/poly.hpp"
#include "mcx/wedge.hpp"

namespace mcx {

// Sphere counts per dimension as polynomials in t_i = m_i - 1.
using SymbolicWedge = std::map<int, MultilinearPoly>;

WedgeDescriptor path_cycle_homotopy(int n, bool is_cycle);
WedgeDescriptor one_child_tree_homotopy(int i);

// Marked positions 1 <= i_1 < ... < i_x <= n such that the unmarked
// positions split into runs of even length.
std::vector<std::vector<int>> enumerate_A(int n, int x);
BigInt a_count(int n, int x);

MultilinearPoly M_poly(int n, int x);
BigInt M_eval(int n, int x, const std::vector<BigInt>& t);

// All legs >= 1.
SymbolicWedge general_caterpillar_symbolic(int n);
WedgeDescriptor general_caterpillar_wedge(const std::vector<int>& legs);
WedgeDescriptor perfect_caterpillar_wedge(int m, int n);

// Rewrites a leg list so that the first entry is >= 1: reversal when the
// last entry is >= 1, otherwise absorbing a leg-free first spine vertex as a
// leg of the second. Returns the list unchanged if it already starts >= 1.
std::vector<int> normalize_caterpillar_legs(const std::vector<int>& legs);
// Legs >= 0 with legs[0] >= 1; zero entries get no variable.
SymbolicWedge arbitrary_caterpillar_symbolic(const std::vector<int>& legs);
WedgeDescriptor arbitrary_caterpillar_wedge(const std::vector<int>& legs);

MultilinearPoly L_poly(int k);
// a_i = m_i - 1 >= 0 at spine positions 1, 3, ..., 2k-1.
WedgeDescriptor alternating_caterpillar_wedge(const std::vector<int>& a);

WedgeDescriptor evaluate(const SymbolicWedge& w, const std::vector<BigInt>& t);

struct Rational {
  long long num = 0;
  long long den = 1;
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct BoundsResult {
  int d_min = 0;
  int d_max = 0;                        // largest dimension allowed to carry cells
  std::optional<Rational> d_max_exact;  // strict bound d < d_max_exact, when stated that way
  int connectivity = 0;
  std::optional<WedgeDescriptor> exact;  // known homotopy type, if any

  bool allows(int d) const;
};

BoundsResult polygon_line_bounds(int n, int t);
BoundsResult honeycomb21_bounds(int t);
int honeycomb_connectivity_bound(int r, int s, int t);
long long binary_tree_connectivity_bound(int h);

}  // namespace mcx
