#pragma once

#include <string>

// The CLI front end as a library call: parse one subcommand, run it, emit
// the JSON document and diagnostics.  Exit code 0 when the re-verified
// witness or report is clean, 1 on a verification failure or discrepancy,
// 2 on usage or parse errors.

namespace cantor::cli {

int run(int argc, const char* const* argv, std::string& out,
        std::string& diag);

}  // namespace cantor::cli
