#pragma once

#include <stdexcept>
#include <string>

namespace trisync {

// Invalid-input family: maps to CLI exit code 2.
struct DegenerateCoupling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CouplingOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidKickRule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotASaddle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical-failure family: maps to CLI exit code 3.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepCollapse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphValidationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConverging : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trisync
