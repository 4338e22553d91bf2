#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uoplab/root_datum.hpp"

namespace uop {

/// Iwahori-Hecke algebra of a root datum in the T-basis, together with
/// Bernstein elements, the spherical subalgebra, the alcove-to-vertex
/// projection and the integral (twisted) Satake transform.
///
/// Basis indices are interned extended affine Weyl elements; coefficients
/// are function values on the corresponding Iwahori double cosets. The
/// instance owns lazily grown multiplication tables and caches, so it is
/// not safe to share one instance across threads; use one per thread.
class HeckeAlgebra {
public:
    using Id = uint32_t;

    struct Elt {
        Coweight lambda;
        int w;
        long len;
        long p2r;  // <2rho, lambda>
    };

    /// Finite map interned element -> nonzero Laurent coefficient.
    struct HeckeElt {
        const HeckeAlgebra* owner = nullptr;
        std::map<Id, LaurentPoly> t;

        bool is_zero() const { return t.empty(); }
        bool operator==(const HeckeElt& o) const { return owner == o.owner && t == o.t; }
        bool operator!=(const HeckeElt& o) const { return !(*this == o); }
    };

    /// Expansion h = sum c_{m,w} theta_m T_w, keyed by (m, finite w).
    struct BernsteinForm {
        std::map<std::pair<Coweight, int>, LaurentPoly> terms;
    };

    /// Function on the coweight lattice (values on I t_lambda K).
    using LambdaFunction = std::map<Coweight, LaurentPoly>;
    /// Integer/Laurent combination of spherical basis labels.
    using SphericalCombo = std::map<Coweight, LaurentPoly>;

    explicit HeckeAlgebra(const RootDatum& d);

    const RootDatum& datum() const { return d_; }

    Id id_of(const ExtAffWeylElt& x);
    const Elt& elt(Id i) const { return elts_[i]; }
    ExtAffWeylElt ext_of(Id i) const { return {elts_[i].lambda, elts_[i].w}; }

    HeckeElt zero() const { return HeckeElt{this, {}}; }
    HeckeElt unit();
    HeckeElt basis(const ExtAffWeylElt& x);
    HeckeElt basis_translation(const Coweight& lambda);

    void add_scaled(HeckeElt& a, const HeckeElt& b, const LaurentPoly& c);

    /// T-basis product. The right factor is decomposed into reduced words
    /// in the simple affine generators; length-zero parts shift indices.
    HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

    /// Convolution of the spherical subalgebra, which normalizes the
    /// special parahoric to volume 1: the Iwahori-normalized product of
    /// bi-K-invariant functions carries an exact Poincare factor, so
    /// this divides it back out. e_K is the unit for this product.
    HeckeElt mul_spherical(const HeckeElt& a, const HeckeElt& b);

    /// Inverse of the basis element T_x over Z[v^{+-1}].
    HeckeElt t_inverse(const ExtAffWeylElt& x);

    /// Bernstein element theta_lambda; equals T_{t_lambda} for
    /// antidominant lambda. Cached.
    const HeckeElt& theta(Coweight lambda);
    /// theta via an explicit auxiliary mu (mu and lambda+mu antidominant);
    /// used to confirm independence of the auxiliary choice.
    HeckeElt theta_with_aux(const Coweight& lambda, const Coweight& mu);
    /// Linear extension of theta over the group algebra.
    HeckeElt theta_of(const GroupAlgElt& r);
    /// theta(lambda) * x, applied letterwise from the factored form of
    /// theta; algebraically identical to mul(theta(lambda), x).
    HeckeElt theta_mul(Coweight lambda, const HeckeElt& x);

    BernsteinForm bernstein_form(const HeckeElt& h);
    HeckeElt from_bernstein(const BernsteinForm& b);

    /// 1_{K t_lambda K}: sum of T_x over the finite double coset
    /// W0 t_lambda W0, each with coefficient 1. NotAntidominant otherwise.
    const HeckeElt& spherical_elt(Coweight lambda);
    const HeckeElt& e_K();
    const LaurentPoly& poincare();

    /// h * e_K read as a function on I\G/K; asserts right-K-invariance.
    LambdaFunction project_IK(const HeckeElt& h);

    bool is_spherical(const HeckeElt& h);
    /// Twisted Satake transform on the spherical subalgebra, normalized
    /// so the unit 1_K maps to e_0; lands in the dot-invariants.
    GroupAlgElt satake(const HeckeElt& h);
    /// Inverse transform: rewrites the projected Bernstein lift of a
    /// dot-invariant element over the spherical Cartan basis.
    SphericalCombo satake_inverse(const GroupAlgElt& r);
    HeckeElt from_spherical_combo(const SphericalCombo& combo);

    std::string to_string(const HeckeElt& h) const;

private:
    struct Shift {
        Id id = UINT32_MAX;
        bool up = false;
    };
    struct Factored {
        struct Letter {
            int kind;  // 0 = T_gen, 1 = T_gen^{-1}, 2 = T_omega
            int gen = -1;
            Id om = 0;
        };
        std::vector<Letter> letters;
    };
    struct Decomp {
        Id omega;
        std::vector<int> word;  // peel order
    };

    const Shift& right_shift(Id x, int g);
    const Shift& left_shift(Id x, int g);
    const Decomp& decomp(Id x);

    void right_mul_gen(HeckeElt& h, int g);
    void right_mul_gen_inv(HeckeElt& h, int g);
    void right_mul_omega(HeckeElt& h, Id om);
    void left_mul_gen(HeckeElt& h, int g);
    void left_mul_gen_inv(HeckeElt& h, int g);
    void left_mul_omega(HeckeElt& h, Id om);
    HeckeElt mul_basis_right(const HeckeElt& a, Id y);
    void apply_factored(const Factored& f, HeckeElt& h);

    const Factored& theta_factored(Coweight lambda);
    Coweight theta_aux(const Coweight& lambda) const;
    const HeckeElt& bernstein_expansion(Coweight m, int w);
    /// Strict order under which the theta-to-T transition is triangular:
    /// the pivot is the term whose translation part pairs lowest against
    /// 2rho, with longer finite part first on ties.
    bool peels_before(Id a, Id b) const;
    Id max_term(const HeckeElt& h) const;
    void check_owner(const HeckeElt& a) const;

    const RootDatum& d_;

    struct VecHash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    std::vector<Elt> elts_;
    std::unordered_map<std::vector<int>, Id, VecHash> index_;
    std::vector<std::vector<Shift>> right_shift_;  // [gen][id]
    std::vector<std::vector<Shift>> left_shift_;
    std::unordered_map<Id, Decomp> decomp_cache_;
    std::map<Coweight, HeckeElt> theta_cache_;
    std::map<Coweight, Factored> theta_factored_cache_;
    std::map<std::pair<Coweight, int>, HeckeElt> bern_cache_;
    std::map<Coweight, HeckeElt> spherical_cache_;
    HeckeElt e_K_;
    LaurentPoly poincare_;
    bool e_K_built_ = false;
};

using HeckeElt = HeckeAlgebra::HeckeElt;

}  // namespace uop
