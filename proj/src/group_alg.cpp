#include "uoplab/group_alg.hpp"

#include <sstream>

namespace uop {

Coweight operator+(const Coweight& a, const Coweight& b) {
    Coweight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
    Coweight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Coweight operator*(int c, const Coweight& a) {
    Coweight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

std::string coweight_to_string(const Coweight& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << "]";
    return os.str();
}

GroupAlgElt GroupAlgElt::unit(int rank) {
    return basis(Coweight(rank, 0));
}

GroupAlgElt GroupAlgElt::basis(const Coweight& c, LaurentPoly w) {
    GroupAlgElt r(static_cast<int>(c.size()));
    if (!w.is_zero()) r.terms_.emplace(c, std::move(w));
    return r;
}

const LaurentPoly* GroupAlgElt::coeff(const Coweight& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? nullptr : &it->second;
}

void GroupAlgElt::add_term(const Coweight& c, const LaurentPoly& w) {
    if (w.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, w);
    } else {
        it->second += w;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GroupAlgElt::check_rank(const GroupAlgElt& o) const {
    if (rank_ != o.rank_)
        throw rank_mismatch("group algebra ranks " + std::to_string(rank_) + " vs " +
                            std::to_string(o.rank_));
}

GroupAlgElt& GroupAlgElt::operator+=(const GroupAlgElt& o) {
    check_rank(o);
    for (const auto& [c, w] : o.terms_) add_term(c, w);
    return *this;
}

GroupAlgElt& GroupAlgElt::operator-=(const GroupAlgElt& o) {
    check_rank(o);
    for (const auto& [c, w] : o.terms_) add_term(c, -w);
    return *this;
}

GroupAlgElt GroupAlgElt::operator+(const GroupAlgElt& o) const {
    GroupAlgElt r = *this;
    r += o;
    return r;
}

GroupAlgElt GroupAlgElt::operator-(const GroupAlgElt& o) const {
    GroupAlgElt r = *this;
    r -= o;
    return r;
}

GroupAlgElt GroupAlgElt::operator-() const {
    GroupAlgElt r(rank_);
    for (const auto& [c, w] : terms_) r.terms_.emplace(c, -w);
    return r;
}

GroupAlgElt GroupAlgElt::operator*(const GroupAlgElt& o) const {
    check_rank(o);
    GroupAlgElt r(rank_);
    for (const auto& [c1, w1] : terms_)
        for (const auto& [c2, w2] : o.terms_) r.add_term(c1 + c2, w1 * w2);
    return r;
}

GroupAlgElt GroupAlgElt::operator*(const LaurentPoly& s) const {
    GroupAlgElt r(rank_);
    if (s.is_zero()) return r;
    for (const auto& [c, w] : terms_) r.terms_.emplace(c, w * s);
    return r;
}

GroupAlgElt GroupAlgElt::pow(int k) const {
    GroupAlgElt r = unit(rank_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::map<Coweight, Rat> GroupAlgElt::eval_q(long q) const {
    std::map<Coweight, Rat> r;
    for (const auto& [c, w] : terms_) {
        Rat v = w.eval_q(q);
        if (v != 0) r.emplace(c, v);
    }
    return r;
}

std::string GroupAlgElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, w] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string ws = w.to_string();
        if (w.terms().size() > 1)
            os << "(" << ws << ")";
        else
            os << ws;
        os << " * e" << coweight_to_string(c);
    }
    return os.str();
}

}  // namespace uop
