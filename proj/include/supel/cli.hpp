#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supel {

/// Command dispatch for the binary, factored out so tests can drive it with
/// captured streams.  args excludes the program name.  Returns 0 on success,
/// 1 on any verification failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supel
