#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A documented precondition of an operation does not hold (e.g. k out of range).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Elements over different generator sets were combined.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A configured work or size budget was exhausted before the computation finished.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace afree
