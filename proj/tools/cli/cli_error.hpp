#pragma once

#include <stdexcept>
#include <string>

namespace ldaroc::cli {

enum class ExitCode : int {
    ok = 0,
    usage = 2,
    parse = 3,
    numerical = 4,  // not positive definite, degenerate model
    io = 5,
    data = 6,  // missing class, too few rows
};

// Error carrying the process exit code it should map to.
class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

inline CliError parse_error(const std::string& message) { return {ExitCode::parse, message}; }
inline CliError io_error(const std::string& message) { return {ExitCode::io, message}; }

}  // namespace ldaroc::cli
