// SPDX-License-Identifier: MIT
//
// Command-line front end, callable in-process so tests can drive it without
// spawning.  Exit codes: 0 success, 1 domain error (with a JSON error
// envelope on stdout), 2 malformed input or usage error.

#ifndef POLYADICA_CLI_HPP
#define POLYADICA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polyadica::cli {

/// Run the tool with `args` (excluding the program name), `input` as the
/// standard-input document, writing all output to `out`.
int run(const std::vector<std::string>& args, const std::string& input,
        std::ostream& out);

/// Which subcommand exposes each library operation (one row per operation).
struct OperationRoute {
    std::string operation;
    std::string subcommand;
};

const std::vector<OperationRoute>& operation_routes();

}  // namespace polyadica::cli

#endif  // POLYADICA_CLI_HPP
