#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

// Bad user input or contract violation. CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed on-disk data; message names the offending field.
struct ParseError : ValidationError {
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

// Filesystem trouble. CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured capacity limit (e.g. statevector memory cap).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qcf
