#pragma once

#include <stdexcept>
#include <string>

namespace homcx {

// Malformed graph text input; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_)
        , line(line_)
    {
    }
    int line;
};

// A configurable resource guard was hit (result-size caps, instance-size
// limits). Maps to exit code 3 in the CLI.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace homcx
