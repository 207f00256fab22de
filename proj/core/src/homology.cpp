#include <algorithm>
#include <future>

#include "mcx/error.hpp"
#include "mcx/homology.hpp"

namespace mcx {

BoundaryMatrix boundary_matrix(const SimplicialComplex& a, int d) {
  BoundaryMatrix b;
  b.dim = d;
  const auto& cols = a.faces(d);
  b.matrix.cols = static_cast<int>(cols.size());
  b.matrix.columns.assign(cols.size(), {});
  if (d <= 0) return b;
  const auto& rows = a.faces(d - 1);
  b.matrix.rows = static_cast<int>(rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto verts = face_vertices(cols[c]);
    auto& col = b.matrix.columns[c];
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const FaceMask sub = cols[c] & ~(FaceMask{1} << verts[k]);
      const auto it = std::lower_bound(rows.begin(), rows.end(), sub, face_lex_less);
      if (it == rows.end() || *it != sub) fail(ErrorKind::Inconsistency, "boundary face missing");
      col.emplace_back(static_cast<int>(it - rows.begin()), (k % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return b;
}

SparseIntMatrix augmentation_matrix(const SimplicialComplex& a) {
  SparseIntMatrix m;
  const auto& v = a.faces(0);
  m.rows = 1;
  m.cols = static_cast<int>(v.size());
  m.columns.assign(v.size(), {{0, 1}});
  return m;
}

bool HomologyProfile::has_torsion() const {
  for (const auto& t : torsion)
    if (!t.empty()) return true;
  return false;
}

long long HomologyProfile::euler_characteristic() const {
  long long e = empty_complex ? -1 : 0;
  for (std::size_t d = 0; d < betti.size(); ++d) e += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
  return e;
}

HomologyProfile reduced_homology(const SimplicialComplex& a, bool parallel) {
  HomologyProfile p;
  const int top = a.dimension();
  if (top < 0) {
    p.empty_complex = true;
    return p;
  }
  // ranks[d] = rank of the boundary map out of dimension d, d = 0..top+1.
  std::vector<SmithResult> snf(top + 2);
  auto work = [&](int d) {
    if (d == 0) {
      snf[0].invariants.assign(a.faces(0).empty() ? 0 : 1, BigInt(1));
    } else if (d <= top) {
      snf[d] = smith_normal_form(boundary_matrix(a, d).matrix);
    }
  };
  if (parallel && top >= 1) {
    std::vector<std::future<void>> jobs;
    for (int d = 1; d <= top; ++d) jobs.push_back(std::async(std::launch::async, work, d));
    work(0);
    for (auto& j : jobs) j.get();
  } else {
    for (int d = 0; d <= top; ++d) work(d);
  }
  p.betti.assign(top + 1, 0);
  p.torsion.assign(top + 1, {});
  for (int d = 0; d <= top; ++d) {
    const std::size_t f = a.faces(d).size();
    const std::size_t r = snf[d].rank() + snf[d + 1].rank();
    if (r > f) fail(ErrorKind::Inconsistency, "boundary ranks exceed face count");
    p.betti[d] = f - r;
    for (const auto& inv : snf[d + 1].invariants)
      if (inv > 1) p.torsion[d].push_back(inv);
  }
  return p;
}

WedgeDescriptor wedge_from_homology(const HomologyProfile& p, bool forest_certified) {
  if (p.has_torsion())
    fail(forest_certified ? ErrorKind::Inconsistency : ErrorKind::Contract,
         "homology has torsion; not a wedge of spheres");
  WedgeDescriptor w;
  if (p.empty_complex) w.add(-1, 1);
  for (std::size_t d = 0; d < p.betti.size(); ++d) w.add(static_cast<int>(d), BigInt(static_cast<unsigned long>(p.betti[d])));
  return w;
}

}  // namespace mcx
