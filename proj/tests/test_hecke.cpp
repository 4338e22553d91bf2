#include <doctest.h>

#include "oracles.hpp"
#include "uoplab/hecke.hpp"
#include "uoplab/verify.hpp"

using namespace uop;

namespace {
const ExtAffWeylElt kS{{0, 0}, 1};  // finite reflection of gl2
}

TEST_CASE("quadratic relation against the finite matrix-group oracle") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    HeckeElt ss = H.mul(H.basis(kS), H.basis(kS));

    // expected shape: q T_e + (q - 1) T_s
    HeckeElt expect = H.zero();
    H.add_scaled(expect, H.unit(), LaurentPoly::v_power(2));
    H.add_scaled(expect, H.basis(kS), LaurentPoly::v_power(2) - LaurentPoly(1));
    CHECK(ss == expect);

    // the convolution values computed from actual Iwahori cosets of
    // GL2 over Z/p^2 pin the coefficients at q
    for (int p : {2, 3}) {
        auto vals = oracle::Gl2ModP2(p).convolve_s_with_s();
        CHECK(vals.cosets_in_IsI == p);
        const LaurentPoly& at_e = ss.t.at(H.id_of(d.ext_identity()));
        const LaurentPoly& at_s = ss.t.at(H.id_of(kS));
        CHECK(at_e.eval_q(p) == Rat(vals.on_identity));
        CHECK(at_s.eval_q(p) == Rat(vals.on_s));
    }
}

TEST_CASE("unit and translation products") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    HeckeElt x = H.mul(H.basis(kS), H.basis_translation({2, -1}));
    CHECK(H.mul(H.unit(), x) == x);
    CHECK(H.mul(x, H.unit()) == x);

    // antidominant translations multiply by index shift: lengths add
    CHECK(d.ext_length({{1, 0}, 0}) + d.ext_length({{1, 0}, 0}) == d.ext_length({{2, 0}, 0}));
    CHECK(H.mul(H.basis_translation({1, 0}), H.basis_translation({1, 0})) ==
          H.basis_translation({2, 0}));
}

TEST_CASE("t_inverse") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
    HeckeElt expect = H.zero();
    H.add_scaled(expect, H.basis(kS), LaurentPoly::v_power(-2));
    H.add_scaled(expect, H.unit(), LaurentPoly::v_power(-2) - LaurentPoly(1));
    CHECK(H.t_inverse(kS) == expect);

    CHECK(H.t_inverse(d.ext_identity()) == H.unit());

    for (const auto& x : elements_in_box(d, 2, 4)) {
        HeckeElt inv = H.t_inverse(x);
        CHECK(H.mul(H.basis(x), inv) == H.unit());
        CHECK(H.mul(inv, H.basis(x)) == H.unit());
        // inverse coefficients live in Z[q^{-1}]: only even powers of v
        for (const auto& [id, c] : inv.t)
            for (const auto& [e, a] : c.terms()) CHECK(e % 2 == 0);
    }
}

TEST_CASE("theta elements") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    // antidominant: theta is the translation basis element itself
    CHECK(H.theta({1, 0}) == H.basis_translation({1, 0}));
    CHECK(H.theta({0, 0}) == H.unit());

    // general: matches the explicit quotient with a stated auxiliary, and
    // is independent of that choice
    HeckeElt via_mu = H.mul(H.basis_translation({1, 1}), H.t_inverse({{1, 0}, 0}));
    CHECK(H.theta({0, 1}) == via_mu);
    CHECK(H.theta_with_aux({0, 1}, {2, 0}) == via_mu);
}

TEST_CASE("theta_of is linear and multiplicative") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    GroupAlgElt r = GroupAlgElt::basis({1, 0}) + GroupAlgElt::basis({0, 1});
    HeckeElt expect = H.theta({1, 0});
    H.add_scaled(expect, H.theta({0, 1}), LaurentPoly(1));
    CHECK(H.theta_of(r) == expect);

    CHECK(H.theta_of(GroupAlgElt::unit(2)) == H.unit());

    // theta_{(1,0)} theta_{(0,1)} = theta_{(1,1)} = T_{t_{(1,1)}}
    CHECK(H.mul(H.theta({1, 0}), H.theta({0, 1})) == H.basis_translation({1, 1}));
}

TEST_CASE("factored theta multiplication agrees with the generic product") {
    for (const auto& name : {"gl2", "sp4"}) {
        RootDatum d = RootDatum::preset(name);
        HeckeAlgebra H(d);
        for (const auto& lx : elements_in_box(d, 1, 1000000)) {
            HeckeElt x = H.basis(lx);
            for (const auto& ly : elements_in_box(d, 1, 3))
                CHECK(H.theta_mul(ly.lambda, x) == H.mul(H.theta(ly.lambda), x));
        }
    }
}

TEST_CASE("bernstein form") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    // antidominant translations are pure theta terms
    auto b = H.bernstein_form(H.basis_translation({2, 1}));
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms.begin()->first == std::make_pair(Coweight{2, 1}, 0));
    CHECK(b.terms.begin()->second == LaurentPoly(1));

    // finite elements are theta_0 T_w
    auto bs = H.bernstein_form(H.basis(kS));
    REQUIRE(bs.terms.size() == 1);
    CHECK(bs.terms.begin()->first == std::make_pair(Coweight{0, 0}, 1));

    // a non-antidominant translation needs several terms and round-trips
    HeckeElt h = H.basis_translation({0, 1});
    auto bn = H.bernstein_form(h);
    CHECK(bn.terms.size() >= 2);
    CHECK(H.from_bernstein(bn) == h);
}

TEST_CASE("spherical elements") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    HeckeElt h = H.spherical_elt({1, 0});
    CHECK(h.t.size() == 4);
    for (const auto& x : {ExtAffWeylElt{{1, 0}, 0}, ExtAffWeylElt{{1, 0}, 1},
                          ExtAffWeylElt{{0, 1}, 0}, ExtAffWeylElt{{0, 1}, 1}})
        CHECK(h.t.at(H.id_of(x)) == LaurentPoly(1));

    CHECK(H.e_K().t.size() == 2);           // sum over the finite Weyl group
    CHECK(H.spherical_elt({1, 1}).t.size() == 2);  // central: {t, t s}

    CHECK_THROWS_AS(H.spherical_elt({0, 1}), not_antidominant);
}

TEST_CASE("projection to the vertex level") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);

    auto f = H.project_IK(H.unit());
    REQUIRE(f.size() == 1);
    CHECK(f.at({0, 0}) == LaurentPoly(1));

    // spherical elements project onto their orbit, the function-value
    // convention putting the Poincare factor on each point: a coset of K
    // holds 1 + q Iwahori cosets
    auto g = H.project_IK(H.spherical_elt({1, 0}));
    REQUIRE(g.size() == 2);
    CHECK(g.at({1, 0}) == H.poincare());
    CHECK(g.at({0, 1}) == H.poincare());

    // the Bernstein lift of the matching dot-invariant projects to the
    // plain value-1 orbit indicator; this is the branch the inverse
    // transform reads
    auto h = H.project_IK(H.theta_of(d.dot_orbit_sum({1, 0})));
    REQUIRE(h.size() == 2);
    CHECK(h.at({1, 0}) == LaurentPoly(1));
    CHECK(h.at({0, 1}) == LaurentPoly(1));
}

TEST_CASE("elements of different algebras do not mix") {
    RootDatum d1 = RootDatum::gl2();
    RootDatum d2 = RootDatum::gl2();
    HeckeAlgebra H1(d1), H2(d2);
    HeckeElt a = H1.unit(), b = H2.unit();
    CHECK_THROWS_AS(H1.mul(a, b), rank_mismatch);
}

TEST_CASE("central elements commute across presets") {
    for (const auto& name : {"sl2", "pgl2", "sl3"}) {
        RootDatum d = RootDatum::preset(name);
        HeckeAlgebra H(d);
        HeckeElt z = H.theta_of(d.dot_orbit_sum(default_antidominant(d)));
        for (const auto& x : elements_in_box(d, 2, 3)) {
            HeckeElt tx = H.basis(x);
            CHECK(H.mul(z, tx) == H.mul(tx, z));
        }
    }
}
