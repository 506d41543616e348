#ifndef THETA_ERRORS_HPP
#define THETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace theta {

enum class ErrorCode {
    EmptyInput,
    MultiEdge,
    TooSmall,
    ShapeMismatch,
    LengthMismatch,
    SpecMismatch,
    OutOfRange,
    ParityFailed,
    WrongShape,
    BadParams,
    TooLarge,
    ConstructionBug,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace theta

#endif
