#pragma once

#include <stdexcept>
#include <string>

namespace pervlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or index mismatch in a matrix operation.
struct DimensionError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

// (psi, phi, can, var) data whose glue matrix id + var*can is singular,
// i.e. data that does not come from a perverse sheaf on the disk.
struct InvalidGlue : Error {
    using Error::Error;
};

// The variation map fed to canonical_P is not injective.
struct NotMono : Error {
    using Error::Error;
};

// A point-supported object was required but the input has generic part.
struct NotSkyscraper : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// A typed invariant failed while loading external data; `invariant` names it.
struct ValidationError : Error {
    std::string invariant;
    ValidationError(std::string inv, const std::string& msg)
        : Error(inv + ": " + msg), invariant(std::move(inv)) {}
};

}  // namespace pervlab
