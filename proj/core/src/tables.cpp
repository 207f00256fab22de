#include "mcx/tables.hpp"

#include "mcx/error.hpp"
#include "mcx/formulas.hpp"

namespace mcx {
namespace {

constexpr int kRows = 7;

std::string perfect_cell(int top, int bottom, int exponent) {
  std::string s = "C(" + std::to_string(top) + "," + std::to_string(bottom) + ")(m-1)";
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

std::string gen_label(int n) {
  if (n <= 3) {
    std::string s = "G" + std::to_string(n) + "(";
    for (int i = 1; i <= n; ++i) s += (i > 1 ? ",m" : "m") + std::to_string(i);
    return s + ")";
  }
  return "G" + std::to_string(n) + "(m1,...,m" + std::to_string(n) + ")";
}

std::string pattern_label(const std::vector<int>& p) {
  std::string s = "G" + std::to_string(p.size()) + "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i] ? "m" + std::to_string(i + 1) : "0";
  }
  return s + ")";
}

TableRow symbolic_row(std::string label, const SymbolicWedge& w, int columns) {
  TableRow r{std::move(label), std::vector<std::string>(columns, "0")};
  for (const auto& [d, p] : w) {
    if (d < 0 || d >= columns) fail(ErrorKind::Inconsistency, "table entry outside its columns");
    r.cells[d] = p.to_string('t');
  }
  return r;
}

TableRow numeric_row(std::string label, const WedgeDescriptor& w, int columns) {
  TableRow r{std::move(label), std::vector<std::string>(columns, "0")};
  for (const auto& [d, c] : w.spheres()) {
    if (d < 0 || d >= columns) fail(ErrorKind::Inconsistency, "table entry outside its columns");
    r.cells[d] = to_string(c);
  }
  return r;
}

}  // namespace

std::string SphereTable::to_text() const {
  std::string s = "Tree/Dim";
  for (int d = 0; d < columns; ++d) s += " | " + std::to_string(d);
  s += "\n";
  for (const auto& r : rows) {
    s += r.label;
    for (const auto& c : r.cells) s += " | " + c;
    s += "\n";
  }
  return s;
}

std::vector<std::vector<int>> table3_patterns() {
  return {{1}, {1, 0}, {1, 0, 1}, {1, 0, 1, 0}, {1, 0, 1, 0, 0}, {1, 0, 1, 0, 0, 1}, {1, 0, 1, 0, 0, 1, 1}};
}

SphereTable sphere_table(int id) {
  SphereTable t;
  t.id = id;
  switch (id) {
    case 1:
      t.title = "Spheres per dimension for perfect m-caterpillars of length n";
      t.columns = kRows;
      for (int n = 1; n <= kRows; ++n) {
        TableRow r{"G" + std::to_string(n) + "p", std::vector<std::string>(n, "0")};
        const int k = n / 2;
        for (int l = 0; l <= k; ++l) {
          if (n % 2 == 0)
            r.cells[k - 1 + l] = perfect_cell(k + l, k - l, 2 * l);
          else
            r.cells[k + l] = perfect_cell(k + l + 1, k - l, 2 * l + 1);
        }
        t.rows.push_back(std::move(r));
      }
      break;
    case 2:
      t.title = "Spheres per dimension for caterpillars with m_i = t_i + 1 legs";
      t.columns = kRows;
      for (int n = 1; n <= kRows; ++n) t.rows.push_back(symbolic_row(gen_label(n), general_caterpillar_symbolic(n), n));
      break;
    case 3:
      t.title = "Spheres per dimension for caterpillars with leg-free spine vertices";
      t.columns = 4;
      for (const auto& p : table3_patterns())
        t.rows.push_back(symbolic_row(pattern_label(p), arbitrary_caterpillar_symbolic(p), t.columns));
      break;
    default:
      fail(ErrorKind::InvalidSpec, "unknown table " + std::to_string(id));
  }
  return t;
}

SphereTable sphere_table_evaluated(int id, const std::vector<BigInt>& values) {
  SphereTable t = sphere_table(id);
  t.rows.clear();
  auto legs_from = [&](std::size_t n, const std::vector<int>* pattern) {
    std::vector<int> legs;
    for (std::size_t i = 0; i < n; ++i) {
      if (pattern && (*pattern)[i] == 0) {
        legs.push_back(0);
        continue;
      }
      if (!values[i].fits_sint_p() || values[i] < 0 || values[i] > 1'000'000)
        fail(ErrorKind::InvalidSpec, "t values must lie in [0, 1000000]");
      legs.push_back(static_cast<int>(values[i].get_si()) + 1);
    }
    return legs;
  };
  switch (id) {
    case 1: {
      if (values.size() != 1 || values[0] < 2 || !values[0].fits_sint_p())
        fail(ErrorKind::InvalidSpec, "table 1 takes a single m >= 2");
      const int m = static_cast<int>(values[0].get_si());
      for (int n = 1; n <= kRows; ++n)
        t.rows.push_back(numeric_row("G" + std::to_string(n) + "p", perfect_caterpillar_wedge(m, n), n));
      break;
    }
    case 2:
      if (values.size() != kRows) fail(ErrorKind::InvalidSpec, "table 2 takes t1..t7");
      for (int n = 1; n <= kRows; ++n)
        t.rows.push_back(numeric_row(gen_label(n), general_caterpillar_wedge(legs_from(n, nullptr)), n));
      break;
    case 3:
      if (values.size() != kRows) fail(ErrorKind::InvalidSpec, "table 3 takes t1..t7");
      for (const auto& p : table3_patterns())
        t.rows.push_back(numeric_row(pattern_label(p), arbitrary_caterpillar_wedge(legs_from(p.size(), &p)), t.columns));
      break;
  }
  return t;
}

}  // namespace mcx
