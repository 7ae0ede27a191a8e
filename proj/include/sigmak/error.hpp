#pragma once

#include <stdexcept>
#include <string>

namespace sigmak {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Input violates an operation's precondition (wrong genome kind, bad k, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A size or work limit was exceeded before the computation could finish.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace sigmak
