/**
 * @file error.hpp
 * @brief Exception type shared by the nilwave library.
 */

#ifndef NILWAVE_ERROR_HPP
#define NILWAVE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilwave {

enum class ErrorCode {
    InvalidInput,
    IncomparableDomain,
    UnsupportedKind,
    UncertifiedDuality,
    NoCuspidal,
    Unsupported,
    DataIntegrity,
};

std::string_view to_string(ErrorCode code);

/// Contract violation or malformed input. Mathematical mismatches found during
/// verification are never reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace nilwave

#endif  // NILWAVE_ERROR_HPP
