#pragma once

#include <stdexcept>
#include <string>

namespace gbclab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on sizes, ranges or flags was violated.
struct InvalidInput : Error {
    using Error::Error;
};

// Geometrically degenerate input (collinear triangle, zero-volume tet, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

// Operation requires a convex body and the input is not convex.
struct NonConvexInput : Error {
    using Error::Error;
};

// An iterative solver did not reach its tolerance within the iteration cap.
struct SolverFailure : Error {
    using Error::Error;
};

// Malformed domain file or unusable document structure.
struct ParseError : Error {
    using Error::Error;
};

} // namespace gbclab
