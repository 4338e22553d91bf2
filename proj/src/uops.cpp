#include "uoplab/uops.hpp"

namespace uop {

UOperator::UOperator(GroupAlgElt r, const RootDatum& d) : r_(std::move(r)), d_(&d) {
    for (const auto& [lambda, c] : r_.terms())
        if (!d.is_antidominant(lambda))
            throw not_antidominant("operator support must lie in the antidominant cone; got " +
                                   coweight_to_string(lambda));
}

UOperator UOperator::basis(const RootDatum& d, const Coweight& lambda) {
    return UOperator(GroupAlgElt::basis(lambda), d);
}

UOperator UOperator::operator*(const UOperator& o) const {
    return UOperator(r_ * o.r_, *d_);
}

std::vector<GroupAlgElt> orbit_char_poly(const RootDatum& d, const Coweight& lambda) {
    if (!d.is_antidominant(lambda))
        throw not_antidominant("orbit polynomial is defined on the antidominant cone; got " +
                               coweight_to_string(lambda));
    const long base = d.pairing_2rho(lambda);
    std::vector<GroupAlgElt> coeffs = {GroupAlgElt::unit(d.rank())};  // X^0 of the empty product
    for (const auto& mu : d.orbit(lambda)) {
        GroupAlgElt root = GroupAlgElt::basis(
            mu, LaurentPoly::v_power(static_cast<int>(base - d.pairing_2rho(mu))));
        std::vector<GroupAlgElt> next(coeffs.size() + 1, GroupAlgElt::zero(d.rank()));
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= coeffs[k] * root;
        }
        coeffs = std::move(next);
    }
    for (const auto& c : coeffs)
        if (!d.is_dot_invariant(c))
            throw check_failure("orbit polynomial coefficient is not dot-invariant");
    return coeffs;
}

namespace {

// the coefficient identity re-checked in exact rational arithmetic at a
// fixed q: sum_k h_k * e_lambda^k = 0 in the specialized group algebra
bool specialization_holds(const std::vector<GroupAlgElt>& coeffs,
                          const Coweight& lambda, long q) {
    std::map<Coweight, Rat> acc;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        auto vals = coeffs[k].eval_q(q);
        Coweight shift = static_cast<int>(k) * lambda;
        for (const auto& [c, v] : vals) {
            Coweight key = c + shift;
            acc[key] += v;
            if (acc[key] == 0) acc.erase(key);
        }
    }
    return acc.empty();
}

}  // namespace

IntegralityCertificate integrality_certificate(HeckeAlgebra& H, const Coweight& lambda,
                                               const std::vector<long>& spec_qs) {
    const RootDatum& d = H.datum();
    IntegralityCertificate cert;
    cert.group = d.name();
    cert.lambda = lambda;

    std::vector<GroupAlgElt> coeffs = orbit_char_poly(d, lambda);
    cert.degree = static_cast<int>(coeffs.size()) - 1;

    // layer: annihilation inside the Iwahori-Hecke algebra
    HeckeElt in_hecke = H.zero();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        HeckeElt term = H.theta_mul(static_cast<int>(k) * lambda, H.theta_of(coeffs[k]));
        H.add_scaled(in_hecke, term, LaurentPoly(1));
    }
    cert.checks.hecke_identity = in_hecke.is_zero();

    // layer: the same sum pushed through the projection, associated the
    // other way around
    HeckeElt projected = H.zero();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        HeckeElt right = H.mul(H.theta_of(coeffs[k]), H.e_K());
        HeckeElt term = H.theta_mul(static_cast<int>(k) * lambda, right);
        H.add_scaled(projected, term, LaurentPoly(1));
    }
    cert.checks.projected_identity = projected.is_zero();

    // layer: spherical rewrite of every coefficient and its round-trip
    bool roundtrip = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        IntegralityCertificate::Coefficient entry;
        entry.power = static_cast<int>(k);
        entry.raw = coeffs[k];
        entry.spherical = H.satake_inverse(coeffs[k]);
        roundtrip &= (H.satake(H.from_spherical_combo(entry.spherical)) == coeffs[k]);
        cert.coefficients.push_back(std::move(entry));
    }
    cert.checks.satake_roundtrip = roundtrip;

    for (long q : spec_qs)
        cert.q_specializations.emplace_back(q, specialization_holds(coeffs, lambda, q));

    return cert;
}

}  // namespace uop
