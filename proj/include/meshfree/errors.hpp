#pragma once

#include <stdexcept>
#include <string>

namespace meshfree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a local linear system is singular or numerically rank-deficient.
// Carries the condition estimate available at the point of failure.
struct SingularSystemError : Error {
    double cond_estimate;
    SingularSystemError(const std::string& what, double cond)
        : Error(what), cond_estimate(cond) {}
};

}  // namespace meshfree
