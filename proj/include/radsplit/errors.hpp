#pragma once

#include <stdexcept>
#include <string>

namespace radsplit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arith
struct ZeroValuation : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct WieferichOverflow : Error { using Error::Error; };
struct DivisibleBase : Error { using Error::Error; };

// fppoly
struct ModulusMismatch : Error { using Error::Error; };
struct DivisionByZeroPoly : Error { using Error::Error; };

// newton
struct NotMonic : Error { using Error::Error; };
struct EmptyPolygon : Error { using Error::Error; };
struct ExtensionCoefficients : Error { using Error::Error; };

// splitting / cid
struct UnsupportedEvenPrime : Error { using Error::Error; };
struct WrongCase : Error { using Error::Error; };

// a contract the mathematics guarantees was violated; always a bug
struct InternalError : Error { using Error::Error; };

}  // namespace radsplit
