#ifndef EXCOMP_CLI_HPP
#define EXCOMP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace excomp::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kViolation = 1,     // a bound check failed
    kParseError = 2,    // malformed input file or command line
    kPrecondition = 3,  // valid input outside an operation's domain or caps
};

/// Entry point of the `excomp` tool; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace excomp::cli

#endif // EXCOMP_CLI_HPP
