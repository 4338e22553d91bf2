#pragma once

#include <stdexcept>
#include <string>

namespace uop {

// Base class for all library errors. `kind()` returns the stable error
// label used by the CLI and the JSON reports.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define UOP_DEFINE_ERROR(klass, label)                                  \
    class klass : public error {                                        \
    public:                                                             \
        explicit klass(const std::string& what) : error(label, what) {} \
    }

UOP_DEFINE_ERROR(rank_mismatch, "RankMismatch");
UOP_DEFINE_ERROR(odd_exponent_at_nonsquare, "OddExponentAtNonSquare");
UOP_DEFINE_ERROR(not_finite_type, "NotFiniteType");
UOP_DEFINE_ERROR(not_antidominant, "NotAntidominant");
UOP_DEFINE_ERROR(solve_failure, "SolveFailure");
UOP_DEFINE_ERROR(not_spherical, "NotSpherical");
UOP_DEFINE_ERROR(not_invariant, "NotInvariant");
UOP_DEFINE_ERROR(not_integral, "NotIntegral");
UOP_DEFINE_ERROR(not_right_k_invariant, "NotRightKInvariant");
UOP_DEFINE_ERROR(boundary_clipped, "BoundaryClipped");
UOP_DEFINE_ERROR(conductor_too_small, "ConductorTooSmall");
UOP_DEFINE_ERROR(parse_error, "ParseError");
UOP_DEFINE_ERROR(invalid_datum, "InvalidDatum");
UOP_DEFINE_ERROR(config_error, "ConfigError");
UOP_DEFINE_ERROR(check_failure, "CheckFailure");

#undef UOP_DEFINE_ERROR

}  // namespace uop
