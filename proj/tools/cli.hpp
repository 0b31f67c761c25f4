#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fragile::cli {

/// Runs one command line. argv[0] is the program name. Graph arguments are a
/// file path, "-" for `in`, or "@name" for a built-in graph.
/// Exit codes: 0 success, 1 negative verdict or colouring failure, 2 error.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fragile::cli
