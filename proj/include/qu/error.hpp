// error.hpp - exception types shared by the qu library
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qu {

// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition (bad scalar, axis out of range, mismatched
// dimensions, ...). Distinct from ParseError so callers can map the two
// classes to different exit codes.
struct DomainError : Error {
    using Error::Error;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct OriginConflict : DomainError {
    using DomainError::DomainError;
};

struct SuffixMismatch : DomainError {
    using DomainError::DomainError;
};

struct PrefixMismatch : DomainError {
    using DomainError::DomainError;
};

struct NotASingleRun : DomainError {
    using DomainError::DomainError;
};

struct IndivisibleLength : DomainError {
    using DomainError::DomainError;
};

struct InvalidSample : DomainError {
    using DomainError::DomainError;
};

struct MalformedGraphString : DomainError {
    using DomainError::DomainError;
};

struct DimensionUnsupported : DomainError {
    using DomainError::DomainError;
};

// Where and why a notation text failed to parse. position is a 0-based
// character offset into the input.
struct ParseDiagnostic {
    std::size_t position = 0;
    std::string message;
};

class ParseError : public Error {
public:
    explicit ParseError(ParseDiagnostic diag)
        : Error(diag.message + " (offset " + std::to_string(diag.position) + ")"),
          diag_(std::move(diag)) {}

    const ParseDiagnostic& diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

}  // namespace qu
