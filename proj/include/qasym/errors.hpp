#ifndef QASYM_ERRORS_HPP
#define QASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qasym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// qspec-parser
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};
struct ValidationError : Error { using Error::Error; };

// series-engine
struct OverflowGuard : Error { using Error::Error; };
struct ExactnessViolation : Error { using Error::Error; };
struct ZeroCoefficient : Error { using Error::Error; };

// asymptotic-core
struct MixedExponentMismatch : Error { using Error::Error; };
struct AlternatingInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OrderViolation : Error { using Error::Error; };
struct WrongExponentSet : Error { using Error::Error; };

// meinardus-engine
struct UnsupportedExponent : Error { using Error::Error; };
struct MultiplePoles : Error { using Error::Error; };
struct UnsupportedPoleSet : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

// catalog
struct ParamError : Error { using Error::Error; };

// cli-verify
struct SignMismatch : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct GapError : Error { using Error::Error; };
struct MismatchError : Error { using Error::Error; };

} // namespace qasym

#endif
