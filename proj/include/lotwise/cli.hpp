#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace lotwise {

/// Process exit codes of the `lotwise` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitValidationFailed = 2,
};

/// Runs `lotwise <subcommand> ...`; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "0.1,0.5,0.9" -> {0.1, 0.5, 0.9}; throws InputError on junk.
std::vector<double> parse_value_list(std::string_view text);

/// "0.1..1.0:0.1" -> {0.1, 0.2, ..., 1.0}; throws InputError on junk.
std::vector<double> parse_value_range(std::string_view text);

}  // namespace lotwise
