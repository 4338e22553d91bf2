#include <doctest.h>

#include <algorithm>

#include "uoplab/tree.hpp"
#include "uoplab/uops.hpp"
#include "uoplab/verify.hpp"

using namespace uop;

TEST_CASE("orbit polynomial for gl2") {
    RootDatum d = RootDatum::gl2();
    auto coeffs = orbit_char_poly(d, {1, 0});
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[2] == GroupAlgElt::unit(2));
    CHECK(coeffs[1] == -(GroupAlgElt::basis({1, 0}) +
                         GroupAlgElt::basis({0, 1}, LaurentPoly::v_power(2))));
    CHECK(coeffs[0] == GroupAlgElt::basis({1, 1}, LaurentPoly::v_power(2)));
}

TEST_CASE("orbit polynomial of a central coweight has degree 1") {
    RootDatum d = RootDatum::gl2();
    auto coeffs = orbit_char_poly(d, {2, 2});
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[1] == GroupAlgElt::unit(2));
    CHECK(coeffs[0] == -GroupAlgElt::basis({2, 2}));
}

TEST_CASE("orbit polynomial coefficients are elementary symmetric functions") {
    RootDatum d = RootDatum::gl3();
    const Coweight lambda{1, 0, 0};
    auto coeffs = orbit_char_poly(d, lambda);
    REQUIRE(coeffs.size() == 4);

    // roots of the product, computed directly from the orbit
    std::vector<GroupAlgElt> roots;
    for (const auto& mu : d.orbit(lambda))
        roots.push_back(GroupAlgElt::basis(
            mu, LaurentPoly::v_power(
                    static_cast<int>(d.pairing_2rho(lambda) - d.pairing_2rho(mu)))));
    REQUIRE(roots.size() == 3);

    // e_1, e_2, e_3 by hand over all index subsets
    GroupAlgElt e1 = roots[0] + roots[1] + roots[2];
    GroupAlgElt e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
    GroupAlgElt e3 = roots[0] * roots[1] * roots[2];
    CHECK(coeffs[2] == -e1);
    CHECK(coeffs[1] == e2);
    CHECK(coeffs[0] == -e3);
    for (const auto& c : coeffs) CHECK(d.is_dot_invariant(c));
}

TEST_CASE("orbit polynomial needs an antidominant index") {
    RootDatum d = RootDatum::gl2();
    CHECK_THROWS_AS(orbit_char_poly(d, {0, 1}), not_antidominant);
}

TEST_CASE("gl2 certificate matches the degree-two Hecke polynomial") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    auto cert = integrality_certificate(H, {1, 0});

    CHECK(cert.degree == 2);
    CHECK(cert.all_passed());
    REQUIRE(cert.coefficients.size() == 3);

    HeckeAlgebra::SphericalCombo top{{{0, 0}, LaurentPoly(1)}};
    HeckeAlgebra::SphericalCombo mid{{{1, 0}, LaurentPoly(-1)}};
    HeckeAlgebra::SphericalCombo low{{{1, 1}, LaurentPoly::v_power(2)}};
    CHECK(cert.coefficients[2].spherical == top);
    CHECK(cert.coefficients[1].spherical == mid);
    CHECK(cert.coefficients[0].spherical == low);
}

TEST_CASE("central operators are already spherical") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    auto cert = integrality_certificate(H, {1, 1});
    CHECK(cert.degree == 1);
    CHECK(cert.all_passed());
    HeckeAlgebra::SphericalCombo low{{{1, 1}, LaurentPoly(-1)}};
    CHECK(cert.coefficients[0].spherical == low);
}

TEST_CASE("sp4 certificate has degree four and passes every layer") {
    RootDatum d = RootDatum::sp4();
    HeckeAlgebra H(d);
    auto cert = integrality_certificate(H, {1, 0}, {2, 4, 9});
    CHECK(cert.degree == 4);
    CHECK(cert.all_passed());
    REQUIRE(cert.q_specializations.size() == 3);
    for (const auto& [q, ok] : cert.q_specializations) CHECK(ok);
}

TEST_CASE("operator ring products") {
    RootDatum d = RootDatum::gl2();
    UOperator a = UOperator::basis(d, {1, 0});
    UOperator b = UOperator::basis(d, {1, 1});

    CHECK(a * a == UOperator::basis(d, {2, 0}));
    CHECK(a * b == UOperator::basis(d, {2, 1}));
    CHECK(a * b == b * a);
    CHECK(a * UOperator::basis(d, {0, 0}) == a);

    CHECK_THROWS_AS(UOperator::basis(d, {0, 1}), not_antidominant);
}

TEST_CASE("operator ring is commutative and associative on random cone points") {
    RootDatum d = RootDatum::sp4();
    std::vector<Coweight> cone;
    for (const auto& x : elements_in_box(d, 2, 1000000))
        if (x.w == 0 && d.is_antidominant(x.lambda)) cone.push_back(x.lambda);
    for (size_t i = 0; i < cone.size(); ++i)
        for (size_t j = i; j < cone.size(); ++j) {
            UOperator a = UOperator::basis(d, cone[i]);
            UOperator b = UOperator::basis(d, cone[j]);
            CHECK(a * b == b * a);
            UOperator c = UOperator::basis(d, cone[(i + j) % cone.size()]);
            CHECK((a * b) * c == a * (b * c));
        }
}

TEST_CASE("gl2 certificate specializes to the tree operator polynomial") {
    RootDatum d = RootDatum::gl2();
    HeckeAlgebra H(d);
    auto cert = integrality_certificate(H, {1, 0});

    // On the rank-1 tree the central label acts trivially, so the
    // certificate specializes to u^2 - T u + q = 0: the weights at X^2,
    // X^1, X^0 evaluate to 1, -1, q.
    for (long q : {2L, 3L}) {
        Rat w2 = cert.coefficients[2].spherical.at({0, 0}).eval_q(q);
        Rat w1 = cert.coefficients[1].spherical.at({1, 0}).eval_q(q);
        Rat w0 = cert.coefficients[0].spherical.at({1, 1}).eval_q(q);
        CHECK(w2 == Rat(1));
        CHECK(w1 == Rat(-1));
        CHECK(w0 == Rat(q));

        TreeModel t(static_cast<int>(q), 6);
        for (const auto& v : t.vertices_up_to(4)) {
            VertexSum dv{{v, 1}};
            VertexSum uu = t.successor_u(t.successor_u(dv));
            VertexSum tu = t.hecke_T(t.successor_u(dv));
            VertexSum res;
            vs_add(res, uu, static_cast<long long>(w2.convert_to<long>()));
            vs_add(res, tu, static_cast<long long>(w1.convert_to<long>()));
            vs_add(res, dv, static_cast<long long>(w0.convert_to<long>()));
            CHECK(res.empty());
        }
    }
}
