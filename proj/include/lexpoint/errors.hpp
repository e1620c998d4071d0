// Exception hierarchy shared across the library.
//
// UsageError covers malformed user input (expressions, flags, file formats)
// and maps to CLI exit code 2.  ComputeError covers runtime failures of the
// mathematics (overflow, poles, exhausted bounds) and maps to exit code 3.
#ifndef LEXPOINT_ERRORS_HPP
#define LEXPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexpoint {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: grammar violations, unknown names, bad flag combinations.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Failures of the computation itself: integer overflow, evaluation at a pole,
// division by zero, exhausted degree bounds or sampling budgets.
class ComputeError : public Error {
public:
    explicit ComputeError(const std::string& msg) : Error(msg) {}
};

// Exact arithmetic left its 64-bit range.  Distinguished from the other
// compute failures so rejection samplers can discard the offending draw.
class OverflowError : public ComputeError {
public:
    explicit OverflowError(const std::string& msg) : ComputeError(msg) {}
};

} // namespace lexpoint

#endif
