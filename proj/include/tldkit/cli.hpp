#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tldkit {

// Runs one command-line invocation. args excludes the program name.
// Exit codes: 0 success (verdict contents do not matter), 1 computation
// disagreement or failed verification, 2 invalid input.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tldkit
