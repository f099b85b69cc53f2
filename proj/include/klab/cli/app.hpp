#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klab::cli {

/// Entry point of the keisler-lab command. args[0] is the program name.
/// Exit codes: 0 every certification holds, 2 a certification failed, 1 usage / IO / schema error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace klab::cli
