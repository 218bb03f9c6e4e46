#pragma once

#include <ostream>

namespace fano::cli {

// Exit codes: 0 success, 2 invalid input (malformed flags, structural
// defects, negative expected dimension), 3 internal consistency failure
// (divisibility, parity or cross-formula disagreement). Reports go to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
