#pragma once

#include <stdexcept>
#include <string>

namespace armey {

/// Error category; the numeric value doubles as the CLI exit code.
enum class ErrorCode {
    Config = 2,   ///< bad flag/config-file value
    Data = 3,     ///< malformed or inconsistent input data
    Numeric = 4,  ///< estimability, collinearity, degenerate inputs
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

    static Error config(const std::string& message) { return {ErrorCode::Config, message}; }
    static Error data(const std::string& message) { return {ErrorCode::Data, message}; }
    static Error numeric(const std::string& message) { return {ErrorCode::Numeric, message}; }

private:
    ErrorCode code_;
};

}  // namespace armey
