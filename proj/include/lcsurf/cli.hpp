#pragma once

// Command-line front end. `run_cli` is the whole program minus the process
// boundary so that tests can drive it with string streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcsurf {

// Exit codes: 0 success (including negative verdicts), 1 engine or document
// error, 2 usage error. Errors print one JSON line prefixed "error: " on
// `err`, followed by human detail.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lcsurf
