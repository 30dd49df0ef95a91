#pragma once

#include <stdexcept>
#include <string>

namespace spackgen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recipe source is not valid in the directive dialect.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_)
        : Error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
    int line;
};

struct IoError : Error {
    using Error::Error;
};

// No recognized build file in the analyzed repository.
struct NoBuildSystemError : Error {
    using Error::Error;
};

struct DuplicateNameError : Error {
    using Error::Error;
};

struct EmptyStoreError : Error {
    using Error::Error;
};

// Endpoint-level failure: network, timeout, HTTP status after retries.
struct GatewayError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    using Error::Error;
};

// Container/process runtime failure, distinct from a recipe failing a stage.
struct SandboxError : Error {
    using Error::Error;
};

struct NameMismatchError : Error {
    using Error::Error;
};

// Unrecoverable infrastructure failure inside a session.
struct AbortError : Error {
    using Error::Error;
};

}  // namespace spackgen
