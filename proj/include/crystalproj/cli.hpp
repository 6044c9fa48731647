#pragma once
// Command-line front end. Exit codes: 0 success, 1 failed verification,
// 2 validation error, 3 computation error, 64 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace crystalproj {

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace crystalproj
