#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowlab::cli {

// Runs one command. Exit code 0 on success, 1 on a domain error, 2 on a
// usage error. Results go to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowlab::cli
