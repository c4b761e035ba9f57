#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overlap {

// Exit codes: 0 success, 1 usage or I/O failure, 2 invalid input, 3 size or budget limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overlap
