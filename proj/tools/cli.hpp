#pragma once

#include <iosfwd>

namespace liftcheck::cli {

// Exit status: 0 success (or NonLifting), 1 bad input, 2 survivors found.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liftcheck::cli
