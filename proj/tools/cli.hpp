#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exdiv::cli {

// Exit codes: 0 success (empty search results included), 1 usage,
// 2 overflow or capacity, 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exdiv::cli
