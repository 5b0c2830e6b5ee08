#pragma once

#include <stdexcept>
#include <string>

namespace ujl {

/// Lattice dimensions or matrix orders outside the supported range.
class size_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method stopped before meeting its tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integrand produced a non-finite value.
class integrand_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ujl
