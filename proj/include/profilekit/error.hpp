#pragma once

#include <stdexcept>
#include <string>

namespace profilekit {

// Base class for all library errors. Subclasses distinguish bad inputs from
// violated domain preconditions so callers (and the CLI) can map them to
// exit codes without string matching.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string & message) : std::runtime_error(message) {}
};

// Malformed arguments: vertex ids out of range, bad parameter combinations.
class InputError : public Error {
public:
    using Error::Error;
};

// A configured budget (subset count, brute-force size cap) would be exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

// The input violates a mathematical precondition of the operation
// (disconnected graph where connectivity is required, non-chordal input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A structured input (tree, decomposition) is malformed.
class StructureError : public Error {
public:
    using Error::Error;
};

// A checked precondition of a verification routine failed; the message
// carries the witness.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Text input could not be parsed; message includes the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace profilekit
