#pragma once

#include <iosfwd>

namespace prasad {

// Exit codes: 0 pass, 1 check failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prasad
