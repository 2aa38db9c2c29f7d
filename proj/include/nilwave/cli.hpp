/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Exit codes: 0 success, 1 invalid mathematical input or a failed binding
 * check, 2 usage error.
 */

#ifndef NILWAVE_CLI_HPP
#define NILWAVE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nilwave::cli {

/// @p args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilwave::cli

#endif  // NILWAVE_CLI_HPP
