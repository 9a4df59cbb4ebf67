/**
 * @file cli.hpp
 * @brief Command-line front end: propagate, diagram, deltak, asym, check.
 *
 * Exit codes: 0 success, 1 configuration or usage error, 2 numerical or
 * domain error, 3 when `check` reports a failure.
 */
#ifndef CRACKCHANNEL_CLI_HPP
#define CRACKCHANNEL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crackchannel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitCheckFailed = 3;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_CLI_HPP
