#ifndef BRAIDINV_CLI_HPP
#define BRAIDINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace braidinv::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kMismatch = 2,
};

// Entry point for the braidinv tool. `args` excludes the program name.
// Subcommands: lift, zmap, qexpand, asymptotics, beta, basis, trace,
// reproduce. Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidinv::cli

#endif // BRAIDINV_CLI_HPP
