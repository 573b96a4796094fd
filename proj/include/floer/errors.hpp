#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace floer {

// Distinct error codes for everything that can be wrong with a complex,
// surfaced by the parser/validator and mapped to CLI exit codes.
enum class ModelError {
    syntax,            // malformed line, bad token, bad name charset
    duplicate_name,    // generator declared twice
    unknown_generator, // arrow endpoint never declared
    duplicate_arrow,   // same arrow listed twice
    filtration,        // arrow increases i or j
    maslov_step,       // arrow does not drop the maslov grading by exactly 1
    d_squared,         // boundary does not square to zero
};

const char* to_string(ModelError e);

// Unreadable text: the file could not be understood line by line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// The text parsed but the data violates a model invariant (also thrown by the
// programmatic builder). line() is 0 when not tied to a specific line.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ModelError code, const std::string& what, std::size_t line = 0);
    ModelError code() const { return code_; }
    std::size_t line() const { return line_; }

private:
    ModelError code_;
    std::size_t line_;
};

// The complex is valid but not standard (its homology or its column/row slice
// homology is not a single GF(2) in the right grading), so surgery invariants
// are not defined for it.
class NotStandardError : public std::runtime_error {
public:
    explicit NotStandardError(const std::string& what);
};

// A required fixture or input file is absent/unreadable.
class MissingDataError : public std::runtime_error {
public:
    explicit MissingDataError(const std::string& what);
};

// Two routes that must agree exactly did not (dual-route checks, impossible
// states). Indicates a defect, not bad input.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what);
};

} // namespace floer
