#pragma once

#include <string>
#include <vector>

#include "mcx/bigint.hpp"

namespace mcx {

struct TableRow {
  std::string label;
  std::vector<std::string> cells;  // cell d is the dimension-d entry
};

struct SphereTable {
  int id = 0;
  std::string title;
  int columns = 0;
  std::vector<TableRow> rows;

  // Header line then one "label | cell | ..." line per row.
  std::string to_text() const;
};

// 1: perfect m-caterpillars, 2: caterpillars with legs everywhere,
// 3: caterpillars with some leg-free spine vertices.
SphereTable sphere_table(int id);
// Table 1 takes {m}; Tables 2 and 3 take {t_1, ..., t_7}.
SphereTable sphere_table_evaluated(int id, const std::vector<BigInt>& values);

// Leg patterns of the Table 3 rows; 1 marks a spine vertex with legs.
std::vector<std::vector<int>> table3_patterns();

}  // namespace mcx
