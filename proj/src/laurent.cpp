#include "uoplab/laurent.hpp"

#include <sstream>

namespace uop {

LaurentPoly LaurentPoly::monomial(Int c, int k) {
    LaurentPoly p;
    if (c != 0) p.terms_[k] = std::move(c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit_monomial(Int& c, int& k) const {
    if (terms_.size() != 1) return false;
    const auto& [exp, coeff] = *terms_.begin();
    if (coeff != 1 && coeff != -1) return false;
    c = coeff;
    k = exp;
    return true;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(const Int& c, int k) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Int& c, int k) {
    if (c == 0) return;
    for (const auto& [e, a] : o.terms_) add_term(a * c, e + k);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.terms_) add_term(a, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.terms_) add_term(-a, e);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, a] : terms_) r.terms_[e] = -a;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, a1] : terms_)
        for (const auto& [e2, a2] : o.terms_) r.add_term(a1 * a2, e1 + e2);
    return r;
}

Rat LaurentPoly::eval_q(long q) const {
    // v = q^{1/2}: even exponents evaluate through q directly; odd ones
    // only when q = s^2 for an integer s.
    long s = 0;
    bool square = false;
    for (long t = 0; t * t <= q; ++t) {
        if (t * t == q) {
            s = t;
            square = true;
            break;
        }
    }
    Rat total = 0;
    for (const auto& [e, a] : terms_) {
        Rat base;
        long ae = e >= 0 ? e : -e;
        if (e % 2 == 0) {
            Int p = 1;
            for (long i = 0; i < ae / 2; ++i) p *= q;
            base = p;
        } else {
            if (!square)
                throw odd_exponent_at_nonsquare("exponent " + std::to_string(e) +
                                                " of v at q=" + std::to_string(q));
            Int p = 1;
            for (long i = 0; i < ae; ++i) p *= s;
            base = p;
        }
        if (e < 0) base = Rat(1) / base;
        total += Rat(a) * base;
    }
    return total;
}

LaurentPoly LaurentPoly::divided_exactly_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw solve_failure("division by zero Laurent polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int d_lo = d.min_exp();
    const Int& d_c = d.terms_.begin()->second;
    // any exact quotient has exponents bounded by the degree difference
    const int k_max = is_zero() ? 0 : max_exp() - d.max_exp();
    while (!rem.is_zero()) {
        const int r_lo = rem.min_exp();
        const Int& r_c = rem.terms_.begin()->second;
        int k = r_lo - d_lo;
        if (k > k_max || r_c % d_c != 0)
            throw solve_failure("inexact Laurent division: " + to_string() + " by " + d.to_string());
        Int c = r_c / d_c;
        quot.add_term(c, k);
        rem.add_scaled(d, -c, k);
        if (!rem.is_zero() && rem.min_exp() <= r_lo)
            throw solve_failure("non-terminating Laurent division");
    }
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : terms_) {
        Int abs_a = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs_a;
        } else if (abs_a == 1) {
            os << "v^" << e;
        } else {
            os << abs_a << "*v^" << e;
        }
    }
    return os.str();
}

}  // namespace uop
