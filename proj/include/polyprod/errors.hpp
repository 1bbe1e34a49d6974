// Error types shared by all polyprod modules.
//
// DomainError covers every rejection of a mathematically invalid input;
// its code() names the condition so callers (and the CLI) can map errors
// without string matching. InternalError marks a failed cross-check
// between two routes that must agree; it is never a caller mistake.
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace polyprod {

enum class errc {
    invalid_vertex,
    ghost_vertex,
    too_many_vertices,
    dimension_mismatch,
    overlapping_support,
    division_by_zero,
    non_positive_q,
    odd_boundary_euler,
    odd_d,
    hypothesis_violated,
    not_flag,
    trivial_factor,
    instance_too_large,
    invalid_argument,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::invalid_vertex:      return "InvalidVertex";
        case errc::ghost_vertex:        return "GhostVertex";
        case errc::too_many_vertices:   return "TooManyVertices";
        case errc::dimension_mismatch:  return "DimensionMismatch";
        case errc::overlapping_support: return "OverlappingSupport";
        case errc::division_by_zero:    return "DivisionByZero";
        case errc::non_positive_q:      return "NonPositiveQ";
        case errc::odd_boundary_euler:  return "OddBoundaryEuler";
        case errc::odd_d:               return "OddD";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::not_flag:            return "NotFlag";
        case errc::trivial_factor:      return "TrivialFactor";
        case errc::instance_too_large:  return "InstanceTooLarge";
        case errc::invalid_argument:    return "InvalidArgument";
    }
    return "UnknownError";
}

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// A cross-check between two independent computations of the same value
// failed. Indicates a bug in this library, not in the caller's input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what)
        : std::logic_error("InternalCheckFailed: " + what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

template <typename... Args>
[[noreturn]] void fail(errc code, Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    throw DomainError(code, os.str());
}

}  // namespace polyprod
