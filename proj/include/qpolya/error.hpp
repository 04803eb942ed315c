#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qpolya {

// Library errors carry a stable machine-readable code next to the human
// message; the CLI maps codes straight into its JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Mathematically invalid input: inadmissible line specs, zero where a nonzero
// value is required, exceeded enumeration/size caps, exhausted precision.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input. position is a 0-based character offset into the
// offending string.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error("syntax_error", message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace qpolya
