#pragma once

#include <stdexcept>
#include <string>

namespace fsd {

// A size cap of one of the small-scale oracles was exceeded (CLI exit code 3).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition of an operation does not hold for the given input.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Schedule and instance do not describe the same job set. Distinct from an
// infeasible-but-well-formed schedule, which the validator reports as a value.
struct StructuralError : std::invalid_argument {
    explicit StructuralError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace fsd
