#pragma once

#include <stdexcept>
#include <string>

namespace swld {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedLaw : std::logic_error {
    using std::logic_error::logic_error;
};

struct SpectrumOverlap : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for parameter combinations outside an experiment's guard region.
struct GuardViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExperimentFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace swld
