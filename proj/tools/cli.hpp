#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperlogic::cli {

/// Runs one command. `args` excludes the program name. Returns 0 when the
/// property holds or the artifact was produced, 1 when it fails or the search
/// is exhausted, and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlogic::cli
