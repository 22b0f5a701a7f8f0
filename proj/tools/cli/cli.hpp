#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modlat::cli {

/// Runs one command line (program name excluded). Returns 0 on success, 1 on
/// a domain error (bad lattice, bad index, corrupt store), 2 on a usage
/// error. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modlat::cli
