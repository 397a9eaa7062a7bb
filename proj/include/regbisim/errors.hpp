#ifndef REGBISIM_ERRORS_HPP
#define REGBISIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regbisim {

enum class ErrorCode {
    endpoint_mismatch,   // sources/targets do not line up
    backend_mismatch,    // objects from different categories (group, prime)
    functor_mismatch,
    non_commuting,       // a cone or cocone that does not commute
    capability,          // operation not offered by this backend
    cap_exceeded,        // enumeration would exceed a size cap
    not_equivariant,
    invalid_group,
    invalid_action,
    non_prime,
    non_reduced,
    schema,
    dangling_identifier,
    invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Errors raised while reading input files; carries a JSON-pointer-like location.
class InputError : public Error {
public:
    InputError(ErrorCode code, std::string location, const std::string& what)
        : Error(code, location + ": " + what), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

inline void require(bool cond, ErrorCode code, const char* what) {
    if (!cond) throw Error(code, what);
}

}  // namespace regbisim

#endif
