#pragma once

#include <stdexcept>
#include <string>

namespace hodgeforge {

/// Broad classes of failure. The CLI maps `malformed_input` to exit code 2
/// and every other kind to exit code 1.
enum class ErrorKind {
    malformed_input,
    quotient_invalid,
    map_invalid,
    not_pseudomanifold,
    not_orientable,
    threshold_failure,
    undefined_determinant,
    convergence,
    dimension_mismatch,
    incomplete_spectrum,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::quotient_invalid: return "quotient-invalid";
    case ErrorKind::map_invalid: return "map-invalid";
    case ErrorKind::not_pseudomanifold: return "not-a-pseudomanifold";
    case ErrorKind::not_orientable: return "not-orientable";
    case ErrorKind::threshold_failure: return "threshold-failure";
    case ErrorKind::undefined_determinant: return "undefined-determinant";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::incomplete_spectrum: return "incomplete-spectrum";
    }
    return "error";
}

}  // namespace hodgeforge
