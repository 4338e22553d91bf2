#pragma once

#include <map>
#include <string>
#include <vector>

#include "uoplab/laurent.hpp"

namespace uop {

/// Cocharacter of the maximal torus, in lattice coordinates.
using Coweight = std::vector<int>;

Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(int c, const Coweight& a);
std::string coweight_to_string(const Coweight& a);

/// Element of the group algebra of the coweight lattice over Z[v^{+-1}]:
/// a finite map coweight -> nonzero Laurent polynomial, multiplied by
/// convolution e_a * e_b = e_{a+b}.
class GroupAlgElt {
public:
    using Terms = std::map<Coweight, LaurentPoly>;

    explicit GroupAlgElt(int rank = 0) : rank_(rank) {}

    static GroupAlgElt zero(int rank) { return GroupAlgElt(rank); }
    static GroupAlgElt unit(int rank);
    static GroupAlgElt basis(const Coweight& c, LaurentPoly w = LaurentPoly(1));

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    const LaurentPoly* coeff(const Coweight& c) const;

    void add_term(const Coweight& c, const LaurentPoly& w);

    GroupAlgElt& operator+=(const GroupAlgElt& o);
    GroupAlgElt& operator-=(const GroupAlgElt& o);
    GroupAlgElt operator+(const GroupAlgElt& o) const;
    GroupAlgElt operator-(const GroupAlgElt& o) const;
    GroupAlgElt operator-() const;
    /// Convolution product; RankMismatch when the lattices differ.
    GroupAlgElt operator*(const GroupAlgElt& o) const;
    GroupAlgElt operator*(const LaurentPoly& s) const;
    GroupAlgElt pow(int k) const;

    bool operator==(const GroupAlgElt& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }
    bool operator!=(const GroupAlgElt& o) const { return !(*this == o); }

    /// Specialize every coefficient at v = q^{1/2} (exact rationals).
    std::map<Coweight, Rat> eval_q(long q) const;

    // terms rendered as "poly * e[l1,...,ln]", lexicographic in the coweight
    std::string to_string() const;

private:
    void check_rank(const GroupAlgElt& o) const;

    int rank_;
    Terms terms_;
};

}  // namespace uop
