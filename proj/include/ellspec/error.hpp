#pragma once

#include <stdexcept>
#include <string>

namespace ellspec {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error { using Error::Error; };        // bad caller input
struct ParseError : Error { using Error::Error; };           // grammar / curve-file syntax
struct PoleError : Error { using Error::Error; };            // evaluation at a pole
struct DivisionByZeroError : Error { using Error::Error; };
struct SingularCurveError : Error { using Error::Error; };
struct BadFiberError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };     // e.g. isotrivial input to theorem scans
struct PreconditionError : Error { using Error::Error; };    // e.g. dependent sections in Gamma
struct ResourceError : Error { using Error::Error; };        // budget exceeded (depth, nodes, factoring)
struct InconsistencyError : Error { using Error::Error; };   // two criteria disagree (precision too low)
struct ContractViolation : Error { using Error::Error; };    // off-curve point and similar

} // namespace ellspec
