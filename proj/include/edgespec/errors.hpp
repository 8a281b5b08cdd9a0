#pragma once

#include <stdexcept>
#include <string>

namespace edgespec {

// Input that fails to parse or violates a documented precondition.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The (n-2,2) component was requested for n <= 3, where the space is zero.
struct RepresentationAbsent : std::domain_error {
    using std::domain_error::domain_error;
};

// Enumeration would exceed the configured work budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exactness invariant failed; indicates a bug, never bad input.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace edgespec
