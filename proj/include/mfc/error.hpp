#pragma once

#include <stdexcept>
#include <string>

namespace mfc {

/// Malformed input document. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called outside its domain (not an MF-complex, bad parameters, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A word-count or completion-size budget was exhausted. `reached_degree` is
/// the last degree that was computed completely.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int reached_degree, const std::string& what)
        : std::runtime_error(what), reached_degree_(reached_degree)
    {
    }
    int reached_degree() const noexcept { return reached_degree_; }

private:
    int reached_degree_;
};

/// total = abelian * 1/(1-g) has no solution with nonnegative integer g.
class FactorizationError : public std::runtime_error {
public:
    FactorizationError(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

}  // namespace mfc
