#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace uavcov {

// Exit codes: 0 success / verdict ok, 1 violation or infeasible,
// 2 usage error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace uavcov
