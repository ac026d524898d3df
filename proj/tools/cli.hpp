#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srev::cli {

// 0: pass, 1: counterexample found, 2: input error.
enum ExitCode : int
{
    exit_pass = 0,
    exit_counterexample = 1,
    exit_input_error = 2,
};

// args excludes the program name.
int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace srev::cli
