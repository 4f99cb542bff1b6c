#ifndef DEFPOW_ERRORS_HPP
#define DEFPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace defpow {

struct MixedRingError : std::invalid_argument {
    explicit MixedRingError(const std::string& what) : std::invalid_argument(what) {}
};

struct MixedAlgebraError : std::invalid_argument {
    explicit MixedAlgebraError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadSpecError : std::invalid_argument {
    explicit BadSpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadBoundError : std::invalid_argument {
    explicit BadBoundError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadSampleError : std::invalid_argument {
    explicit BadSampleError(const std::string& what) : std::invalid_argument(what) {}
};

struct BadRingError : std::invalid_argument {
    explicit BadRingError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroElementError : std::invalid_argument {
    explicit ZeroElementError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnboundVarError : std::runtime_error {
    explicit UnboundVarError(const std::string& var)
        : std::runtime_error("unbound variable: " + var), name(var) {}
    std::string name;
};

// Thrown by the formula/term parser; `pos` is a byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace defpow

#endif
