#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kiso::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalid = 1,     // verify: set does not isolate
    kInputError = 2,  // bad file, bad flags, refusals, inapplicable input
    kViolation = 3,   // check-theorem found a counterexample
};

// Runs the command line given as argv[1..]; reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "0 1 4" or "0,1,4"; empty text is the empty set.
std::vector<int> parse_set_literal(const std::string& text);

}  // namespace kiso::cli
