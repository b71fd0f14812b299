#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minhom {

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 2 when a solve is infeasible, 1 on usage or input errors.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace minhom
