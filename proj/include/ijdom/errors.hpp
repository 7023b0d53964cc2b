#ifndef IJDOM_ERRORS_HPP
#define IJDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ijdom {

// Malformed or out-of-contract input (bad file syntax, bad coordinates,
// out-of-range vertex ids). CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// Input is syntactically fine but violates a structural requirement the
// algorithms depend on (vertex ordering property). CLI exit code 3.
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& m) : std::runtime_error(m) {}
};

// A configured resource guard was hit (search cap, memo cap). CLI exit code 4.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& m) : std::runtime_error(m) {}
};

// Input violates a modelling assumption of the reduction (e.g. a clause
// mentioning the same variable twice). CLI exit code 5.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ijdom

#endif
