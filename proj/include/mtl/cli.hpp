#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtl {

/// Runs one CLI invocation.  args excludes the program name.  Documents go
/// to out, diagnostics to err; "-" as a file argument reads from in.
///
/// Exit codes: 0 success; 1 usage, IO or parse error; 2 axiom-validation
/// failure; 3 precondition failure; 4 claim verification found
/// counterexamples.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mtl
