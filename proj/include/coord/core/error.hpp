#pragma once

#include <stdexcept>
#include <string>

namespace coord {

/// Error raised on contract violations and malformed input. `code` is a
/// stable machine-readable identifier (e.g. "wiring", "arity", "algebra").
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace coord
