#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operads {

// Command-line driver. args excludes the program name. Returns 0 on
// success, 1 when a law sweep produced an unexpected verdict, 2 on usage or
// evaluation errors.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace operads
