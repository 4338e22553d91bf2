#pragma once

#include <string>
#include <vector>

#include "uoplab/hecke.hpp"

namespace uop {

/// Element of the commutative operator ring: a group-algebra element
/// supported in the antidominant cone.
class UOperator {
public:
    explicit UOperator(GroupAlgElt r, const RootDatum& d);
    static UOperator basis(const RootDatum& d, const Coweight& lambda);

    const GroupAlgElt& r() const { return r_; }
    UOperator operator*(const UOperator& o) const;
    bool operator==(const UOperator& o) const { return r_ == o.r_; }

private:
    UOperator() = default;
    GroupAlgElt r_{0};
    const RootDatum* d_ = nullptr;
};

/// Coefficients of prod_{mu in orbit(lambda)} (X - v^{<2rho,lambda-mu>} e_mu),
/// listed for X^0 .. X^d; every coefficient is dot-invariant.
std::vector<GroupAlgElt> orbit_char_poly(const RootDatum& d, const Coweight& lambda);

struct IntegralityCertificate {
    std::string group;
    Coweight lambda;
    int degree = 0;

    struct Coefficient {
        int power = 0;
        HeckeAlgebra::SphericalCombo spherical;  // antidominant label -> weight
        GroupAlgElt raw{0};                      // dot-invariant group algebra form
    };
    std::vector<Coefficient> coefficients;  // ascending power, monic at the top

    struct Checks {
        bool hecke_identity = false;      // sum_k theta^k * Theta(h_k) = 0
        bool projected_identity = false;  // (sum_k theta^k * Theta(h_k)) * e_K = 0
        bool satake_roundtrip = false;    // satake of the spherical rewrite gives h_k back
    } checks;

    std::vector<std::pair<long, bool>> q_specializations;

    bool all_passed() const {
        bool ok = checks.hecke_identity && checks.projected_identity && checks.satake_roundtrip;
        for (const auto& [q, pass] : q_specializations) ok &= pass;
        return ok;
    }
};

/// Builds the monic annihilating polynomial of u_lambda over the spherical
/// basis and verifies it exactly, layer by layer. CheckFailure is never
/// thrown on verification failure; failures are recorded in `checks`.
IntegralityCertificate integrality_certificate(HeckeAlgebra& H, const Coweight& lambda,
                                               const std::vector<long>& spec_qs = {4, 9});

}  // namespace uop
