#pragma once

#include <stdexcept>
#include <string>

namespace trizeta {

// Gamma evaluated at a non-positive integer argument.
struct GammaPoleError : std::domain_error {
    explicit GammaPoleError(const std::string& what) : std::domain_error(what) {}
};

// Pole of a local zeta function or L-factor.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Violated operation precondition (parameter ordering, parity, ranges).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A (shape, components, algebra) combination outside the supported enumeration.
struct CaseError : std::invalid_argument {
    explicit CaseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace trizeta
