/**
 * @file cli.hpp
 * @brief In-process entry point for the seqtool command line.
 *
 * Exit codes: 0 = verified/success, 1 = mathematical mismatch,
 * 2 = usage or parse error.
 */
#ifndef SEQTOOL_CLI_HPP
#define SEQTOOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace seqtool {

int run_seqtool(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqtool

#endif  // SEQTOOL_CLI_HPP
