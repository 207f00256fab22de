#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcx::cli {

// Exit codes: 0 ok, 1 inconsistency, 2 parse, 3 invalid spec, 4 budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcx::cli
