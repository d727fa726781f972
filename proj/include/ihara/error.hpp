#ifndef IHARA_ERROR_HPP
#define IHARA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ihara {

enum class ErrorCode {
    InvalidArgument,
    OutOfRange,
    LoopEdge,
    DuplicateEdge,
    NotBipartite,
    NotSemiRegular,
    NotRegular,
    Disconnected,
    NegativeExponent,
    IntegralityViolation,
    NotSymmetric,
    NoConvergence,
    ConstantTermNotOne,
    ExactDivisionFailure,
    IdentityViolation,
    MismatchWithOracle,
    BiconditionalViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ihara

#endif // IHARA_ERROR_HPP
