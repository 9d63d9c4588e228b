#pragma once

#include <ostream>

namespace patterncount::cli {

// Exit codes: 0 ok, 1 self-test failure, 2 parse failure, 3 inapplicable algorithm, 4 overflow.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace patterncount::cli
