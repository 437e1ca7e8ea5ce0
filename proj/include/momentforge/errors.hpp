#pragma once

#include <stdexcept>
#include <string>

namespace momentforge {

/// Base of every library error.  `exit_code()` is what the CLI returns.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Bad input: malformed data, violated precondition, failed invariant.
class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// A configured guardrail (order, memory, dimension) would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

class NotRationalInteger : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class NonDominantWeight : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class ZeroVector : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class ElementNotInGroup : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class DegreeMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : ValidationError(format(what, line, column)), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return "parse error: " + what;
        return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }
    int line_;
    int column_;
};

class OrderCapExceeded : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};
class MemoryCapExceeded : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};
class RepDimCap : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

// Internal consistency failures: these indicate a bug, not bad input.
class ClosureMismatch : public Error {
public:
    using Error::Error;
};
class HomomorphismViolation : public Error {
public:
    using Error::Error;
};

}  // namespace momentforge
