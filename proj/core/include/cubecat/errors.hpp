#pragma once

#include <stdexcept>
#include <string>

namespace cubecat {

enum class ErrorKind {
    RegularityViolation,
    ChartMismatch,
    BadCoords,
    Disconnected,
    NotTwoSided,
    InconsistentMatrix,
    MissingOppositeVertex,
    PatternMismatch,
    NoGoodConfiguration,
    NotAdditive,
    NoneFound,
    MissingAttachment,
    NotClean,
    MissingCoords,
    EulerViolation,
    BoundViolation,
    BudgetExhausted,
    UnknownName,
    SpecError,
    IoError,
};

const char* error_kind_name(ErrorKind k);

/// Library-wide exception; `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace cubecat
