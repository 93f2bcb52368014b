#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgcrp {

// Exit codes: 0 success (and all requested checks hold), 1 a requested
// property fails (witness printed), 2 usage error, 3 I/O or parse error,
// 4 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgcrp
