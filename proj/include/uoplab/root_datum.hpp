#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uoplab/group_alg.hpp"

namespace uop {

using IntMat = std::vector<std::vector<int>>;  // row-major n x n

IntMat mat_identity(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
Coweight mat_apply(const IntMat& m, const Coweight& v);

/// Finite Weyl group element as exposed to callers: its action on the
/// coweight lattice and its Coxeter length.
struct FiniteWeylElt {
    IntMat action;
    int length = 0;
};

/// Element (translation, finite part) of the extended affine Weyl group.
/// The finite part is an index into the owning datum's Weyl table.
struct ExtAffWeylElt {
    Coweight lambda;
    int w = 0;

    bool operator==(const ExtAffWeylElt& o) const { return lambda == o.lambda && w == o.w; }
};

/// Based root datum for a split group: positive roots and coroots in
/// lattice coordinates, the integral pairing being the coordinate dot
/// product. Immutable after construction; construction enumerates the
/// finite Weyl group and the affine generator set.
class RootDatum {
public:
    RootDatum(std::string name, int rank, std::vector<std::vector<int>> positive_roots,
              std::vector<int> simple_indices, std::vector<std::vector<int>> positive_coroots,
              std::optional<size_t> weyl_bound = std::nullopt);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
    const std::vector<std::vector<int>>& positive_coroots() const { return positive_coroots_; }
    const std::vector<int>& simple_indices() const { return simple_indices_; }
    const std::vector<int>& two_rho() const { return two_rho_; }

    long pairing(const std::vector<int>& character, const Coweight& cocharacter) const;
    long pairing_2rho(const Coweight& c) const { return pairing(two_rho_, c); }

    // ---- finite Weyl group ----
    int weyl_order() const { return static_cast<int>(weyl_action_.size()); }
    const IntMat& weyl_action(int w) const { return weyl_action_[w]; }
    int weyl_length(int w) const { return weyl_length_[w]; }
    int weyl_mul(int a, int b) const;
    int weyl_inv(int w) const { return weyl_inv_[w]; }
    Coweight act(int w, const Coweight& c) const { return mat_apply(weyl_action_[w], c); }
    /// Complete element list with actions and lengths.
    std::vector<FiniteWeylElt> weyl_elements() const;
    /// Canonical renderings: the action matrix in row-major brackets, and
    /// extended elements as (lambda | w) pairs.
    std::string weyl_to_string(int w) const;
    std::string ext_to_string(const ExtAffWeylElt& x) const;

    // ---- dominance ----
    /// true iff <lambda, alpha> >= 0 for every positive root alpha (the
    /// cone indexing the operator ring and the spherical Cartan basis).
    bool is_antidominant(const Coweight& lambda) const;
    bool is_central(const Coweight& lambda) const;
    /// For each simple root i, an antidominant coweight pairing to
    /// cone_scale(i) > 0 with alpha_i and to 0 with the other simples.
    const Coweight& cone_rep(int i) const { return cone_reps_[i]; }
    long cone_scale(int i) const { return cone_scales_[i]; }
    int num_simple() const { return static_cast<int>(simple_indices_.size()); }

    // ---- extended affine Weyl group ----
    ExtAffWeylElt ext_identity() const { return {Coweight(rank_, 0), 0}; }
    ExtAffWeylElt ext_from_translation(const Coweight& lambda) const { return {lambda, 0}; }
    ExtAffWeylElt ext_mul(const ExtAffWeylElt& a, const ExtAffWeylElt& b) const;
    ExtAffWeylElt ext_inv(const ExtAffWeylElt& a) const;
    /// Iwahori-Matsumoto length.
    long ext_length(const ExtAffWeylElt& x) const;

    /// Simple affine generators: one reflection per simple root plus, for
    /// each irreducible component, the reflection in the affine wall of
    /// the highest root.
    const std::vector<ExtAffWeylElt>& affine_gens() const { return affine_gens_; }

    struct Decomposition {
        ExtAffWeylElt omega;        // length-zero remainder
        std::vector<int> word;      // generator indices, peel order:
                                    // x = omega * s[k-1] * ... * s[0]
    };
    /// Greedy right-descent decomposition; word length equals ext_length.
    Decomposition decompose(const ExtAffWeylElt& x) const;

    // ---- twisted (dot) action ----
    /// e_lambda -> v^{<2rho, lambda - w lambda>} e_{w lambda}, extended
    /// linearly over Z[v^{+-1}].
    GroupAlgElt dot_act(int w, const GroupAlgElt& r) const;
    /// Distinct orbit coweights of lambda under the finite Weyl group.
    std::vector<Coweight> orbit(const Coweight& lambda) const;
    /// Sum of dot_act over the orbit (one term per distinct image).
    GroupAlgElt dot_orbit_sum(const Coweight& lambda) const;
    bool is_dot_invariant(const GroupAlgElt& r) const;

    // ---- presets ----
    static RootDatum gl2();
    static RootDatum sl2();
    static RootDatum pgl2();
    static RootDatum gl3();
    static RootDatum sl3();
    static RootDatum sp4();
    static RootDatum preset(const std::string& name);
    static std::vector<std::string> preset_names();

    static size_t default_weyl_bound();

private:
    void validate_and_build(size_t weyl_bound);
    void build_weyl(size_t weyl_bound);
    void build_affine_gens();
    void build_cone_reps();
    int reflection_index(int root_index) const;

    std::string name_;
    int rank_;
    std::vector<std::vector<int>> positive_roots_;
    std::vector<int> simple_indices_;
    std::vector<std::vector<int>> positive_coroots_;
    std::vector<int> two_rho_;

    // Weyl tables: coweight action A, character action B = (A^T)^{-1},
    // lengths, inverses, full multiplication table.
    std::vector<IntMat> weyl_action_;
    std::vector<IntMat> weyl_char_action_;
    std::vector<int> weyl_length_;
    std::vector<int> weyl_inv_;
    std::vector<std::vector<int>> weyl_mult_;
    // sign of w^{-1} . alpha_i for each positive root, per w
    std::vector<std::vector<char>> inv_flips_root_;

    std::vector<ExtAffWeylElt> affine_gens_;
    std::vector<Coweight> cone_reps_;
    std::vector<long> cone_scales_;
};

}  // namespace uop
