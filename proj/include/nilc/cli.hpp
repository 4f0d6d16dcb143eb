#pragma once

#include <ostream>

namespace nilc {

// Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilc
