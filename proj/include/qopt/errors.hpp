#pragma once

#include <stdexcept>
#include <string>

namespace qopt {

// Raised by file parsers; the message names the offending 1-based line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Raised when an exact solver or state-vector routine is asked to handle
// more qubits than its guard allows.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a model transformation cannot be applied (unbounded slack,
// non-integer slack range, infeasible constraint).
class transform_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qopt
