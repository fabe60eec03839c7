#pragma once

#include <stdexcept>

namespace lo {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEvent : Error { using Error::Error; };
struct InvalidBehavior : Error { using Error::Error; };
struct ScenarioMismatch : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct InvalidVertex : Error { using Error::Error; };
struct NotAClique : Error { using Error::Error; };
struct InvalidArity : Error { using Error::Error; };
struct InvalidSymmetry : Error { using Error::Error; };
struct NotAnLOInequality : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct NoViolationInRange : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace lo
