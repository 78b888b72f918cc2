#pragma once

#include <stdexcept>
#include <string>

namespace qsmoments {

// Thrown when an internal consistency check fails (an implementation bug,
// never a usage error). Preconditions on arguments throw std::invalid_argument.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qsmoments
