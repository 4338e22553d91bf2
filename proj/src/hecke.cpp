#include "uoplab/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace uop {

HeckeAlgebra::HeckeAlgebra(const RootDatum& d) : d_(d) {
    right_shift_.resize(d_.affine_gens().size());
    left_shift_.resize(d_.affine_gens().size());
}

HeckeAlgebra::Id HeckeAlgebra::id_of(const ExtAffWeylElt& x) {
    std::vector<int> key = x.lambda;
    key.push_back(x.w);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Id id = static_cast<Id>(elts_.size());
    elts_.push_back({x.lambda, x.w, d_.ext_length(x), d_.pairing_2rho(x.lambda)});
    index_.emplace(std::move(key), id);
    return id;
}

HeckeElt HeckeAlgebra::unit() { return basis(d_.ext_identity()); }

HeckeElt HeckeAlgebra::basis(const ExtAffWeylElt& x) {
    HeckeElt h{this, {}};
    h.t.emplace(id_of(x), LaurentPoly(1));
    return h;
}

HeckeElt HeckeAlgebra::basis_translation(const Coweight& lambda) {
    return basis(d_.ext_from_translation(lambda));
}

void HeckeAlgebra::check_owner(const HeckeElt& a) const {
    if (a.owner != this)
        throw rank_mismatch("Hecke element does not belong to this algebra instance");
}

void HeckeAlgebra::add_scaled(HeckeElt& a, const HeckeElt& b, const LaurentPoly& c) {
    check_owner(a);
    check_owner(b);
    if (c.is_zero()) return;
    for (const auto& [id, w] : b.t) {
        auto it = a.t.find(id);
        if (it == a.t.end()) {
            LaurentPoly p = w * c;
            if (!p.is_zero()) a.t.emplace(id, std::move(p));
        } else {
            it->second += w * c;
            if (it->second.is_zero()) a.t.erase(it);
        }
    }
}

const HeckeAlgebra::Shift& HeckeAlgebra::right_shift(Id x, int g) {
    auto& table = right_shift_[g];
    if (table.size() <= x) table.resize(elts_.size());
    if (table[x].id == UINT32_MAX) {
        const long x_len = elts_[x].len;
        ExtAffWeylElt y = d_.ext_mul({elts_[x].lambda, elts_[x].w}, d_.affine_gens()[g]);
        Id yid = id_of(y);  // may grow elts_ and the shift tables
        long dl = elts_[yid].len - x_len;
        if (dl != 1 && dl != -1) throw check_failure("length step by affine generator not +-1");
        auto& tab = right_shift_[g];
        if (tab.size() <= x) tab.resize(elts_.size());
        tab[x] = {yid, dl == 1};
        return tab[x];
    }
    return table[x];
}

const HeckeAlgebra::Shift& HeckeAlgebra::left_shift(Id x, int g) {
    auto& table = left_shift_[g];
    if (table.size() <= x) table.resize(elts_.size());
    if (table[x].id == UINT32_MAX) {
        const long x_len = elts_[x].len;
        ExtAffWeylElt y = d_.ext_mul(d_.affine_gens()[g], {elts_[x].lambda, elts_[x].w});
        Id yid = id_of(y);
        long dl = elts_[yid].len - x_len;
        if (dl != 1 && dl != -1) throw check_failure("length step by affine generator not +-1");
        auto& tab = left_shift_[g];
        if (tab.size() <= x) tab.resize(elts_.size());
        tab[x] = {yid, dl == 1};
        return tab[x];
    }
    return table[x];
}

const HeckeAlgebra::Decomp& HeckeAlgebra::decomp(Id x) {
    auto it = decomp_cache_.find(x);
    if (it != decomp_cache_.end()) return it->second;
    const Elt& e = elts_[x];
    auto d = d_.decompose({e.lambda, e.w});
    Decomp out{id_of(d.omega), std::move(d.word)};
    return decomp_cache_.emplace(x, std::move(out)).first->second;
}

void HeckeAlgebra::right_mul_gen(HeckeElt& h, int g) {
    std::map<Id, LaurentPoly> out;
    auto acc = [&out](Id id, const LaurentPoly& c, int shift, int sign) {
        auto& dst = out[id];
        dst.add_scaled(c, sign, shift);
        if (dst.is_zero()) out.erase(id);
    };
    for (const auto& [x, c] : h.t) {
        const Shift& s = right_shift(x, g);
        if (s.up) {
            acc(s.id, c, 0, 1);
        } else {
            acc(s.id, c, 2, 1);   // q T_{xs}
            acc(x, c, 2, 1);      // (q-1) T_x
            acc(x, c, 0, -1);
        }
    }
    h.t = std::move(out);
}

void HeckeAlgebra::right_mul_gen_inv(HeckeElt& h, int g) {
    std::map<Id, LaurentPoly> out;
    auto acc = [&out](Id id, const LaurentPoly& c, int shift, int sign) {
        auto& dst = out[id];
        dst.add_scaled(c, sign, shift);
        if (dst.is_zero()) out.erase(id);
    };
    for (const auto& [x, c] : h.t) {
        const Shift& s = right_shift(x, g);
        if (!s.up) {
            acc(s.id, c, 0, 1);
        } else {
            acc(s.id, c, -2, 1);  // q^{-1} T_{xs}
            acc(x, c, -2, 1);     // (q^{-1}-1) T_x
            acc(x, c, 0, -1);
        }
    }
    h.t = std::move(out);
}

void HeckeAlgebra::right_mul_omega(HeckeElt& h, Id om) {
    ExtAffWeylElt omega = ext_of(om);
    std::map<Id, LaurentPoly> out;
    for (const auto& [x, c] : h.t) out.emplace(id_of(d_.ext_mul(ext_of(x), omega)), c);
    h.t = std::move(out);
}

void HeckeAlgebra::left_mul_gen(HeckeElt& h, int g) {
    std::map<Id, LaurentPoly> out;
    auto acc = [&out](Id id, const LaurentPoly& c, int shift, int sign) {
        auto& dst = out[id];
        dst.add_scaled(c, sign, shift);
        if (dst.is_zero()) out.erase(id);
    };
    for (const auto& [x, c] : h.t) {
        const Shift& s = left_shift(x, g);
        if (s.up) {
            acc(s.id, c, 0, 1);
        } else {
            acc(s.id, c, 2, 1);
            acc(x, c, 2, 1);
            acc(x, c, 0, -1);
        }
    }
    h.t = std::move(out);
}

void HeckeAlgebra::left_mul_gen_inv(HeckeElt& h, int g) {
    std::map<Id, LaurentPoly> out;
    auto acc = [&out](Id id, const LaurentPoly& c, int shift, int sign) {
        auto& dst = out[id];
        dst.add_scaled(c, sign, shift);
        if (dst.is_zero()) out.erase(id);
    };
    for (const auto& [x, c] : h.t) {
        const Shift& s = left_shift(x, g);
        if (!s.up) {
            acc(s.id, c, 0, 1);
        } else {
            acc(s.id, c, -2, 1);
            acc(x, c, -2, 1);
            acc(x, c, 0, -1);
        }
    }
    h.t = std::move(out);
}

void HeckeAlgebra::left_mul_omega(HeckeElt& h, Id om) {
    ExtAffWeylElt omega = ext_of(om);
    std::map<Id, LaurentPoly> out;
    for (const auto& [x, c] : h.t) out.emplace(id_of(d_.ext_mul(omega, ext_of(x))), c);
    h.t = std::move(out);
}

HeckeElt HeckeAlgebra::mul_basis_right(const HeckeElt& a, Id y) {
    const Decomp& dec = decomp(y);
    HeckeElt out = a;
    right_mul_omega(out, dec.omega);
    // T_y = T_omega T_{s_k} ... T_{s_1} with the word stored in peel order
    for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) right_mul_gen(out, *it);
    return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) {
    check_owner(a);
    check_owner(b);
    HeckeElt out = zero();
    for (const auto& [y, c] : b.t) {
        HeckeElt part = mul_basis_right(a, y);
        add_scaled(out, part, c);
    }
    return out;
}

HeckeElt HeckeAlgebra::mul_spherical(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt h = mul(a, b);
    const LaurentPoly& p = poincare();
    for (auto& [id, c] : h.t) c = c.divided_exactly_by(p);
    return h;
}

HeckeElt HeckeAlgebra::t_inverse(const ExtAffWeylElt& x) {
    // T_x = T_omega T_{s_k} ... T_{s_1}  =>
    // T_x^{-1} = T_{s_1}^{-1} ... T_{s_k}^{-1} T_{omega^{-1}}
    Id xid = id_of(x);
    const Decomp& dec = decomp(xid);
    HeckeElt out = unit();
    for (int g : dec.word) right_mul_gen_inv(out, g);
    Id om_inv = id_of(d_.ext_inv(ext_of(dec.omega)));
    right_mul_omega(out, om_inv);
    return out;
}

Coweight HeckeAlgebra::theta_aux(const Coweight& lambda) const {
    Coweight mu(d_.rank(), 0);
    for (int i = 0; i < d_.num_simple(); ++i) {
        long p = d_.pairing(d_.positive_roots()[d_.simple_indices()[i]], lambda);
        if (p >= 0) continue;
        long c = d_.cone_scale(i);
        long k = (-p + c - 1) / c;
        mu = mu + static_cast<int>(k) * d_.cone_rep(i);
    }
    return mu;
}

const HeckeAlgebra::Factored& HeckeAlgebra::theta_factored(Coweight lambda) {
    auto it = theta_factored_cache_.find(lambda);
    if (it != theta_factored_cache_.end()) return it->second;

    Factored f;
    Coweight mu = theta_aux(lambda);
    bool trivial_aux = true;
    for (int x : mu) trivial_aux &= (x == 0);

    if (!trivial_aux) {
        // T_{t_mu}^{-1} applied first:
        // T_{t_mu}^{-1} = T_{s_1}^{-1} ... T_{s_k}^{-1} T_{omega^{-1}},
        // innermost factor first when acting on the right operand
        Id mu_id = id_of(d_.ext_from_translation(mu));
        Id om_inv = id_of(d_.ext_inv(ext_of(decomp(mu_id).omega)));
        f.letters.push_back({2, -1, om_inv});
        const Decomp& dmu = decomp(mu_id);
        for (auto itw = dmu.word.rbegin(); itw != dmu.word.rend(); ++itw)
            f.letters.push_back({1, *itw, 0});
    }
    {
        Id top_id = id_of(d_.ext_from_translation(lambda + mu));
        const Decomp& dtop = decomp(top_id);
        for (int g : dtop.word) f.letters.push_back({0, g, 0});
        f.letters.push_back({2, -1, dtop.omega});
    }
    return theta_factored_cache_.emplace(std::move(lambda), std::move(f)).first->second;
}

void HeckeAlgebra::apply_factored(const Factored& f, HeckeElt& h) {
    for (const auto& letter : f.letters) {
        switch (letter.kind) {
            case 0: left_mul_gen(h, letter.gen); break;
            case 1: left_mul_gen_inv(h, letter.gen); break;
            default: left_mul_omega(h, letter.om); break;
        }
    }
}

HeckeElt HeckeAlgebra::theta_mul(Coweight lambda, const HeckeElt& x) {
    check_owner(x);
    const Factored& f = theta_factored(std::move(lambda));
    HeckeElt out = x;
    apply_factored(f, out);
    return out;
}

const HeckeElt& HeckeAlgebra::theta(Coweight lambda) {
    auto it = theta_cache_.find(lambda);
    if (it != theta_cache_.end()) return it->second;
    HeckeElt th = theta_mul(lambda, unit());
    return theta_cache_.emplace(std::move(lambda), std::move(th)).first->second;
}

HeckeElt HeckeAlgebra::theta_with_aux(const Coweight& lambda, const Coweight& mu) {
    if (!d_.is_antidominant(mu) || !d_.is_antidominant(lambda + mu))
        throw not_antidominant("auxiliary coweight for theta must keep both factors in the cone");
    return mul(basis_translation(lambda + mu), t_inverse(d_.ext_from_translation(mu)));
}

HeckeElt HeckeAlgebra::theta_of(const GroupAlgElt& r) {
    if (r.rank() != d_.rank()) throw rank_mismatch("group algebra element of wrong rank");
    HeckeElt out = zero();
    for (const auto& [lambda, c] : r.terms()) add_scaled(out, theta(lambda), c);
    return out;
}

bool HeckeAlgebra::peels_before(Id a, Id b) const {
    const Elt& ea = elts_[a];
    const Elt& eb = elts_[b];
    if (ea.p2r != eb.p2r) return ea.p2r < eb.p2r;
    const int la = d_.weyl_length(ea.w), lb = d_.weyl_length(eb.w);
    if (la != lb) return la > lb;
    if (ea.lambda != eb.lambda) return ea.lambda < eb.lambda;
    return ea.w < eb.w;
}

HeckeAlgebra::Id HeckeAlgebra::max_term(const HeckeElt& h) const {
    Id best = h.t.begin()->first;
    for (const auto& [id, c] : h.t)
        if (peels_before(id, best)) best = id;
    return best;
}

const HeckeElt& HeckeAlgebra::bernstein_expansion(Coweight m, int w) {
    auto key = std::make_pair(std::move(m), w);
    auto it = bern_cache_.find(key);
    if (it != bern_cache_.end()) return it->second;
    HeckeElt e = theta_mul(key.first, basis({Coweight(d_.rank(), 0), w}));
    return bern_cache_.emplace(std::move(key), std::move(e)).first->second;
}

HeckeAlgebra::BernsteinForm HeckeAlgebra::bernstein_form(const HeckeElt& h) {
    check_owner(h);
    BernsteinForm out;
    HeckeElt rem = h;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 2000000) throw solve_failure("Bernstein elimination did not terminate");
        Id top = max_term(rem);
        const Coweight m = elts_[top].lambda;
        const int w = elts_[top].w;
        const HeckeElt& exp = bernstein_expansion(m, w);
        auto lead_it = exp.t.find(top);
        Int uc;
        int uk;
        if (lead_it == exp.t.end() || !lead_it->second.is_unit_monomial(uc, uk))
            throw solve_failure("Bernstein expansion is not unitriangular at the leading term");
        LaurentPoly coeff = rem.t.at(top) * LaurentPoly::monomial(uc, -uk);
        out.terms[{m, w}] += coeff;
        add_scaled(rem, exp, -coeff);
        if (!rem.is_zero() && !peels_before(top, max_term(rem)))
            throw solve_failure("Bernstein elimination failed to make progress");
    }
    for (auto it2 = out.terms.begin(); it2 != out.terms.end();) {
        if (it2->second.is_zero())
            it2 = out.terms.erase(it2);
        else
            ++it2;
    }
    return out;
}

HeckeElt HeckeAlgebra::from_bernstein(const BernsteinForm& b) {
    HeckeElt out = zero();
    for (const auto& [key, c] : b.terms) add_scaled(out, bernstein_expansion(key.first, key.second), c);
    return out;
}

const HeckeElt& HeckeAlgebra::spherical_elt(Coweight lambda) {
    if (!d_.is_antidominant(lambda))
        throw not_antidominant("spherical basis is indexed by the antidominant cone; got " +
                               coweight_to_string(lambda));
    auto it = spherical_cache_.find(lambda);
    if (it != spherical_cache_.end()) return it->second;
    HeckeElt out = zero();
    for (int u = 0; u < d_.weyl_order(); ++u) {
        Coweight ul = d_.act(u, lambda);
        for (int w = 0; w < d_.weyl_order(); ++w) {
            Id id = id_of({ul, d_.weyl_mul(u, w)});
            out.t.emplace(id, LaurentPoly(1));
        }
    }
    return spherical_cache_.emplace(std::move(lambda), std::move(out)).first->second;
}

const HeckeElt& HeckeAlgebra::e_K() {
    if (!e_K_built_) {
        e_K_ = spherical_elt(Coweight(d_.rank(), 0));
        poincare_ = LaurentPoly();
        for (int w = 0; w < d_.weyl_order(); ++w)
            poincare_ += LaurentPoly::v_power(2 * d_.weyl_length(w));
        e_K_built_ = true;
    }
    return e_K_;
}

const LaurentPoly& HeckeAlgebra::poincare() {
    e_K();
    return poincare_;
}

HeckeAlgebra::LambdaFunction HeckeAlgebra::project_IK(const HeckeElt& h) {
    check_owner(h);
    HeckeElt g = mul(h, e_K());
    // group values by the translation part; they must be constant on each
    // right coset x W0
    std::map<Coweight, std::map<int, LaurentPoly>> by_lambda;
    for (const auto& [id, c] : g.t) {
        const Elt& e = elts_[id];
        by_lambda[e.lambda][e.w] = c;
    }
    LambdaFunction out;
    for (const auto& [lambda, vals] : by_lambda) {
        if (static_cast<int>(vals.size()) != d_.weyl_order())
            throw not_right_k_invariant("coset " + coweight_to_string(lambda) +
                                        " carries a partially supported value");
        const LaurentPoly& first = vals.begin()->second;
        for (const auto& [w, c] : vals)
            if (c != first)
                throw not_right_k_invariant("value not constant on coset " +
                                            coweight_to_string(lambda));
        out.emplace(lambda, first);
    }
    return out;
}

bool HeckeAlgebra::is_spherical(const HeckeElt& h) {
    check_owner(h);
    auto value_at = [&](const Coweight& l, int w) -> LaurentPoly {
        std::vector<int> key = l;
        key.push_back(w);
        auto it = index_.find(key);
        if (it == index_.end()) return LaurentPoly();
        auto jt = h.t.find(it->second);
        return jt == h.t.end() ? LaurentPoly() : jt->second;
    };
    for (const auto& [id, c] : h.t) {
        const Elt& e = elts_[id];
        for (int u = 0; u < d_.weyl_order(); ++u) {
            // right coset constancy
            if (value_at(e.lambda, d_.weyl_mul(e.w, u)) != c) return false;
            // left coset constancy
            if (value_at(d_.act(u, e.lambda), d_.weyl_mul(u, e.w)) != c) return false;
        }
    }
    return true;
}

GroupAlgElt HeckeAlgebra::satake(const HeckeElt& h) {
    check_owner(h);
    if (!is_spherical(h))
        throw not_spherical("element is not constant on the K-double cosets");
    BernsteinForm b = bernstein_form(h);
    GroupAlgElt raw(d_.rank());
    for (const auto& [key, c] : b.terms) {
        LaurentPoly shifted;
        shifted.add_scaled(c, 1, 2 * d_.weyl_length(key.second));
        raw.add_term(key.first, shifted);
    }
    GroupAlgElt out(d_.rank());
    for (const auto& [m, c] : raw.terms()) out.add_term(m, c.divided_exactly_by(poincare()));
    return out;
}

HeckeAlgebra::SphericalCombo HeckeAlgebra::satake_inverse(const GroupAlgElt& r) {
    if (r.rank() != d_.rank()) throw rank_mismatch("group algebra element of wrong rank");
    if (!d_.is_dot_invariant(r))
        throw not_invariant("satake_inverse needs a dot-invariant element");
    LambdaFunction f = project_IK(theta_of(r));
    SphericalCombo combo;
    for (const auto& [lambda, c] : f) {
        if (!d_.is_antidominant(lambda)) continue;
        combo.emplace(lambda, c);
        for (const auto& mu : d_.orbit(lambda)) {
            if (mu == lambda) continue;
            auto it = f.find(mu);
            if (it == f.end() || it->second != c)
                throw not_integral("projected lift is not constant on the orbit of " +
                                   coweight_to_string(lambda));
        }
    }
    // every support point must be accounted for by exactly one orbit
    size_t covered = 0;
    for (const auto& [lambda, c] : combo) covered += d_.orbit(lambda).size();
    if (covered != f.size())
        throw not_integral("projected lift has support outside antidominant orbits");
    return combo;
}

HeckeElt HeckeAlgebra::from_spherical_combo(const SphericalCombo& combo) {
    HeckeElt out = zero();
    for (const auto& [lambda, c] : combo) add_scaled(out, spherical_elt(lambda), c);
    return out;
}

std::string HeckeAlgebra::to_string(const HeckeElt& h) const {
    if (h.t.empty()) return "0";
    std::vector<Id> ids;
    ids.reserve(h.t.size());
    for (const auto& [id, c] : h.t) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](Id a, Id b) {
        const Elt& ea = elts_[a];
        const Elt& eb = elts_[b];
        if (ea.len != eb.len) return ea.len < eb.len;
        if (ea.lambda != eb.lambda) return ea.lambda < eb.lambda;
        return ea.w < eb.w;
    });
    std::ostringstream os;
    bool first = true;
    for (Id id : ids) {
        if (!first) os << " + ";
        first = false;
        const Elt& e = elts_[id];
        const LaurentPoly& c = h.t.at(id);
        std::string cs = c.to_string();
        if (c.terms().size() > 1)
            os << "(" << cs << ")";
        else
            os << cs;
        os << " * T(" << coweight_to_string(e.lambda) << "|w" << e.w << ")";
    }
    return os.str();
}

}  // namespace uop
