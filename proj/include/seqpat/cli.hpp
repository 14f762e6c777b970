#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqpat {

// Runs one command given argv-style arguments (program name excluded).
// Results go to `out` unless --output redirects them to a file;
// diagnostics go to `err`. Returns the process exit status: 0 on success,
// 1 on a usage or configuration error, 2 on a data or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqpat
