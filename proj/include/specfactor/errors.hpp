#pragma once

#include <stdexcept>

namespace specfactor {

// Hard structural limit exceeded (order > 64, gadget node budget,
// canonical-form cap, enumeration cap). Distinct from std::invalid_argument,
// which is reserved for malformed or out-of-range parameters.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative numeric procedure hit its iteration cap before reaching the
// requested residual. Never swallowed: callers see this, not a partial value.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace specfactor
