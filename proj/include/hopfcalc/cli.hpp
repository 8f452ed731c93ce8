#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hopfcalc {

// Parses and executes one command line (without the program name).
// Returns the process exit code: 0 success, 2 usage or input-syntax error,
// 3 mathematical error (its bare name goes to `err`), 1 failed check suite.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// Which kernel operations each verb surfaces. The entries partition
// all_kernel_operations(): every operation is reachable from exactly one
// verb, which the CLI test suite enforces.
const std::map<std::string, std::vector<std::string>>& verb_operation_table();
std::vector<std::string> all_kernel_operations();

}  // namespace hopfcalc
