#ifndef SYMQ_CLI_HPP
#define SYMQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symq {

/// Command dispatcher behind the symq binary. `args` excludes the program
/// name. One JSON report goes to `out`; usage problems go to `err`.
/// Exit code contract: 0 success, 1 domain error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace symq

#endif  // SYMQ_CLI_HPP
