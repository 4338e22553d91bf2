#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "uoplab/errors.hpp"

namespace uop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer Laurent polynomial in the formal variable v, with v^2 playing
/// the role of the residue cardinality q. All coefficient arithmetic in
/// the library runs through this type; there is no floating point.
///
/// Invariant: no stored coefficient is zero (canonical sparse form).
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

    // c * v^k
    static LaurentPoly monomial(Int c, int k);
    static LaurentPoly v_power(int k) { return monomial(1, k); }
    // v^2, i.e. q itself
    static LaurentPoly q() { return monomial(1, 2); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // true iff the polynomial is +-v^k; reports (c, k) when it is
    bool is_unit_monomial(Int& c, int& k) const;

    const Terms& terms() const { return terms_; }
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    // in-place a += c * v^k
    void add_term(const Int& c, int k);
    // in-place a += c * v^k * o
    void add_scaled(const LaurentPoly& o, const Int& c, int k = 0);

    /// Exact value at v = q^{1/2}. Every exponent must be even, unless q
    /// is a perfect square; otherwise OddExponentAtNonSquare.
    Rat eval_q(long q) const;

    /// Exact quotient this / d; SolveFailure when the division leaves a
    /// remainder (callers use this only where exactness is a theorem).
    LaurentPoly divided_exactly_by(const LaurentPoly& d) const;

    // terms rendered as "c*v^k", ascending exponent
    std::string to_string() const;

private:
    Terms terms_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
    return LaurentPoly(c) * p;
}

}  // namespace uop
