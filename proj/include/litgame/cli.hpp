#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace litgame::cli {

enum class ExitStatus : int {
    Success = 0,
    DomainFailure = 1,  ///< UndefinedPosterior, UnreachableTarget, failed agreement, I/O
    UsageError = 2,     ///< bad flags, bad documents, out-of-range numbers
    InternalError = 3,  ///< an invariant check tripped
};

enum class OutputFormat { Table, Json, Csv };

/// Maps an in-flight exception onto the exit-code contract.
ExitStatus classify(const std::exception_ptr& error) noexcept;

/// Runs one invocation. `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace litgame::cli
