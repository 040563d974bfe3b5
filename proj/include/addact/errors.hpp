#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addact {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Raised when a structure-constant table fails validation on load.
struct TableInvalid : Error {
    using Error::Error;
};

/// Raised when an algebra is not local; carries the radical dimension found.
struct NotLocal : Error {
    std::size_t radical_dim;
    NotLocal(std::size_t rd, std::size_t dim)
        : Error("algebra is not local: radical has dimension " + std::to_string(rd) +
                ", expected " + std::to_string(dim - 1)),
          radical_dim(rd) {}
};

/// Raised when a monomial ideal is not cofinite; carries the offending variable.
struct InfiniteQuotient : Error {
    int variable;
    explicit InfiniteQuotient(int var)
        : Error("quotient is infinite dimensional: no pure power of variable " +
                std::to_string(var) + " in the ideal"),
          variable(var) {}
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct NotAmple : Error {
    using Error::Error;
};

/// Raised for twisted constructions on the surface with n = 0.
struct NZero : Error {
    using Error::Error;
};

/// Raised by operator-based constructions; carries the witness pair.
struct NonCommuting : Error {
    std::size_t i, j;
    NonCommuting(std::size_t i_, std::size_t j_)
        : Error("operators " + std::to_string(i_) + " and " + std::to_string(j_) +
                " do not commute"),
          i(i_), j(j_) {}
};

struct NotNilpotent : Error {
    std::size_t index;
    explicit NotNilpotent(std::size_t idx)
        : Error("operator " + std::to_string(idx) + " is not nilpotent"), index(idx) {}
};

struct GenerationDefect : Error {
    using Error::Error;
};

struct NotTwoGenerated : Error {
    using Error::Error;
};

struct NotMonomialSPair : Error {
    using Error::Error;
};

struct PointNotOnVariety : Error {
    using Error::Error;
};

struct SurfaceMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace addact
