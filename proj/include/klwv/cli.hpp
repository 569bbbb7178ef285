#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klwv {

/// Runs one klwv command (arguments exclude the program name).
/// Exit code: 0 all checks pass, 1 some check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klwv
