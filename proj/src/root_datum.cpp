#include "uoplab/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace uop {

IntMat mat_identity(int n) {
    IntMat m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    IntMat r(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

Coweight mat_apply(const IntMat& m, const Coweight& v) {
    const int n = static_cast<int>(m.size());
    Coweight r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

namespace {

// reflection on coweights: c -> c - <alpha, c> alpha_vee
IntMat coweight_reflection(const std::vector<int>& alpha, const std::vector<int>& alpha_vee) {
    const int n = static_cast<int>(alpha.size());
    IntMat m = mat_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] -= alpha_vee[i] * alpha[j];
    return m;
}

// reflection on characters: a -> a - <a, alpha_vee> alpha
IntMat character_reflection(const std::vector<int>& alpha, const std::vector<int>& alpha_vee) {
    const int n = static_cast<int>(alpha.size());
    IntMat m = mat_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] -= alpha[i] * alpha_vee[j];
    return m;
}

std::string mat_key(const IntMat& m) {
    std::ostringstream os;
    for (const auto& row : m)
        for (int x : row) os << x << ",";
    return os.str();
}

}  // namespace

size_t RootDatum::default_weyl_bound() {
    if (const char* env = std::getenv("UOPLAB_MAX_WEYL")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 10000;
}

RootDatum::RootDatum(std::string name, int rank, std::vector<std::vector<int>> positive_roots,
                     std::vector<int> simple_indices, std::vector<std::vector<int>> positive_coroots,
                     std::optional<size_t> weyl_bound)
    : name_(std::move(name)),
      rank_(rank),
      positive_roots_(std::move(positive_roots)),
      simple_indices_(std::move(simple_indices)),
      positive_coroots_(std::move(positive_coroots)) {
    validate_and_build(weyl_bound.value_or(default_weyl_bound()));
}

long RootDatum::pairing(const std::vector<int>& character, const Coweight& cocharacter) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long>(character[i]) * cocharacter[i];
    return s;
}

void RootDatum::validate_and_build(size_t weyl_bound) {
    if (rank_ <= 0) throw invalid_datum("rank must be positive");
    if (positive_roots_.size() != positive_coroots_.size())
        throw invalid_datum("positive_roots and positive_coroots must pair up");
    for (const auto& v : positive_roots_)
        if (static_cast<int>(v.size()) != rank_) throw invalid_datum("root of wrong rank");
    for (const auto& v : positive_coroots_)
        if (static_cast<int>(v.size()) != rank_) throw invalid_datum("coroot of wrong rank");
    for (int i : simple_indices_)
        if (i < 0 || i >= num_positive_roots()) throw invalid_datum("simple index out of range");

    for (size_t i = 0; i < positive_roots_.size(); ++i) {
        if (pairing(positive_roots_[i], positive_coroots_[i]) != 2)
            throw invalid_datum("<alpha, alpha_vee> != 2 for root #" + std::to_string(i));
    }

    // every positive root must be a nonnegative integer combination of
    // the simple roots (solved by height recursion)
    for (int r = 0; r < num_positive_roots(); ++r) {
        // BFS over sums: a root is simple or (previous root + simple root)
        bool simple = false;
        for (int s : simple_indices_) simple |= (s == r);
        if (simple) continue;
        // check reachable: root - some simple root is again a positive root
        std::set<std::vector<int>> pos(positive_roots_.begin(), positive_roots_.end());
        std::vector<std::vector<int>> frontier = {positive_roots_[r]};
        std::set<std::vector<int>> seen;
        bool ok = false;
        while (!frontier.empty() && !ok) {
            auto cur = frontier.back();
            frontier.pop_back();
            bool zero = true;
            for (int x : cur) zero &= (x == 0);
            if (zero) {
                ok = true;
                break;
            }
            if (!seen.insert(cur).second) continue;
            for (int s : simple_indices_) {
                std::vector<int> next(rank_);
                for (int i = 0; i < rank_; ++i) next[i] = cur[i] - positive_roots_[s][i];
                bool znext = true;
                for (int x : next) znext &= (x == 0);
                if (znext || pos.count(next)) frontier.push_back(next);
            }
        }
        if (!ok)
            throw invalid_datum("positive root #" + std::to_string(r) +
                                " is not a nonnegative combination of simple roots");
    }

    two_rho_.assign(rank_, 0);
    for (const auto& a : positive_roots_)
        for (int i = 0; i < rank_; ++i) two_rho_[i] += a[i];

    for (const auto& cv : positive_coroots_) {
        long p = pairing(two_rho_, cv);
        if (p % 2 != 0)
            throw invalid_datum("<2rho, alpha_vee> odd for a coroot; twisted exponents would leave Z");
    }

    build_weyl(weyl_bound);
    build_affine_gens();
    build_cone_reps();
}

void RootDatum::build_weyl(size_t weyl_bound) {
    const int n = rank_;
    std::map<std::string, int> index;
    weyl_action_.clear();
    weyl_char_action_.clear();

    auto add = [&](const IntMat& a, const IntMat& b) -> int {
        std::string key = mat_key(a);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(weyl_action_.size());
        if (weyl_action_.size() >= weyl_bound)
            throw not_finite_type("Weyl closure exceeds bound " + std::to_string(weyl_bound));
        weyl_action_.push_back(a);
        weyl_char_action_.push_back(b);
        index.emplace(std::move(key), id);
        return id;
    };

    add(mat_identity(n), mat_identity(n));

    std::vector<std::pair<IntMat, IntMat>> gens;
    for (int s : simple_indices_)
        gens.emplace_back(coweight_reflection(positive_roots_[s], positive_coroots_[s]),
                          character_reflection(positive_roots_[s], positive_coroots_[s]));

    // BFS closure under right multiplication by the simple reflections
    std::vector<std::vector<int>> right_by_gen;
    for (size_t head = 0; head < weyl_action_.size(); ++head) {
        right_by_gen.emplace_back(gens.size(), -1);
        for (size_t g = 0; g < gens.size(); ++g) {
            IntMat a = mat_mul(weyl_action_[head], gens[g].first);
            IntMat b = mat_mul(weyl_char_action_[head], gens[g].second);
            right_by_gen[head][g] = add(a, b);
        }
    }
    // second pass for elements discovered late
    while (right_by_gen.size() < weyl_action_.size()) {
        size_t head = right_by_gen.size();
        right_by_gen.emplace_back(gens.size(), -1);
        for (size_t g = 0; g < gens.size(); ++g) {
            IntMat a = mat_mul(weyl_action_[head], gens[g].first);
            IntMat b = mat_mul(weyl_char_action_[head], gens[g].second);
            right_by_gen[head][g] = add(a, b);
        }
    }

    const int order = weyl_order();

    // character action must permute the root set
    std::map<std::vector<int>, int> root_sign;  // root -> +1 / -1 times index+1
    for (int r = 0; r < num_positive_roots(); ++r) {
        root_sign[positive_roots_[r]] = r + 1;
        std::vector<int> neg(rank_);
        for (int i = 0; i < rank_; ++i) neg[i] = -positive_roots_[r][i];
        root_sign[neg] = -(r + 1);
    }
    auto char_image = [&](int w, int root_index) -> int {
        std::vector<int> img(rank_, 0);
        const IntMat& b = weyl_char_action_[w];
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) img[i] += b[i][j] * positive_roots_[root_index][j];
        auto it = root_sign.find(img);
        if (it == root_sign.end())
            throw invalid_datum("Weyl action does not permute the root set");
        return it->second;
    };

    weyl_length_.assign(order, 0);
    for (int w = 0; w < order; ++w) {
        int len = 0;
        for (int r = 0; r < num_positive_roots(); ++r)
            if (char_image(w, r) < 0) ++len;
        weyl_length_[w] = len;
    }

    weyl_mult_.assign(order, std::vector<int>(order, -1));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            IntMat m = mat_mul(weyl_action_[a], weyl_action_[b]);
            auto it = index.find(mat_key(m));
            if (it == index.end()) throw invalid_datum("Weyl closure not closed under products");
            weyl_mult_[a][b] = it->second;
        }

    weyl_inv_.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (weyl_mult_[a][b] == 0) weyl_inv_[a] = b;

    inv_flips_root_.assign(order, std::vector<char>(num_positive_roots(), 0));
    for (int w = 0; w < order; ++w)
        for (int r = 0; r < num_positive_roots(); ++r)
            inv_flips_root_[w][r] = char_image(weyl_inv_[w], r) < 0 ? 1 : 0;
}

int RootDatum::reflection_index(int root_index) const {
    IntMat m = coweight_reflection(positive_roots_[root_index], positive_coroots_[root_index]);
    for (int w = 0; w < weyl_order(); ++w)
        if (weyl_action_[w] == m) return w;
    throw invalid_datum("reflection of root #" + std::to_string(root_index) +
                        " does not lie in the generated Weyl group");
}

void RootDatum::build_affine_gens() {
    affine_gens_.clear();
    // finite simple reflections
    for (int s : simple_indices_) affine_gens_.push_back({Coweight(rank_, 0), reflection_index(s)});

    // heights of positive roots in the simple basis, per component
    const int ns = num_simple();
    if (ns == 0) return;

    // component of each simple root (Dynkin adjacency)
    std::vector<int> comp(ns, -1);
    int ncomp = 0;
    for (int i = 0; i < ns; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack = {i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < ns; ++b) {
                if (comp[b] != -1) continue;
                long p = pairing(positive_roots_[simple_indices_[a]],
                                 positive_coroots_[simple_indices_[b]]);
                if (p != 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
            }
        }
        ++ncomp;
    }

    // express each positive root over the simple roots (small BFS)
    auto decompose_root = [&](int r) -> std::vector<int> {
        std::map<std::vector<int>, std::vector<int>> how;  // remaining -> coeffs
        std::vector<int> zero_coeff(ns, 0);
        std::vector<std::vector<int>> frontier = {positive_roots_[r]};
        how[positive_roots_[r]] = zero_coeff;
        std::set<std::vector<int>> pos(positive_roots_.begin(), positive_roots_.end());
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            auto coeffs = how[cur];
            bool zero = true;
            for (int x : cur) zero &= (x == 0);
            if (zero) return coeffs;
            for (int s = 0; s < ns; ++s) {
                std::vector<int> next(rank_);
                for (int i = 0; i < rank_; ++i)
                    next[i] = cur[i] - positive_roots_[simple_indices_[s]][i];
                bool znext = true;
                for (int x : next) znext &= (x == 0);
                if (!znext && !pos.count(next)) continue;
                if (how.count(next)) continue;
                auto c = coeffs;
                c[s] += 1;
                how[next] = c;
                frontier.push_back(next);
            }
        }
        throw invalid_datum("cannot express root over simple roots");
    };

    // highest root per component: maximal height among roots supported there
    for (int c = 0; c < ncomp; ++c) {
        int best = -1, best_h = -1;
        for (int r = 0; r < num_positive_roots(); ++r) {
            auto coeffs = decompose_root(r);
            bool in_comp = false;
            int h = 0;
            for (int s = 0; s < ns; ++s) {
                h += coeffs[s];
                if (coeffs[s] > 0 && comp[s] == c) in_comp = true;
            }
            if (in_comp && h > best_h) {
                best_h = h;
                best = r;
            }
        }
        if (best < 0) continue;
        // affine reflection in the wall <theta, .> = 1
        ExtAffWeylElt s0{positive_coroots_[best], reflection_index(best)};
        if (ext_length(s0) != 1)
            throw invalid_datum("affine reflection of component highest root has length != 1");
        affine_gens_.push_back(std::move(s0));
    }
}

void RootDatum::build_cone_reps() {
    const int ns = num_simple();
    cone_reps_.clear();
    cone_scales_.clear();
    // solve <x, alpha_j> = scale * delta_ij over the rationals, then clear
    // denominators; antidominance is automatic (pairings with nonnegative
    // combinations of simples stay nonnegative)
    for (int i = 0; i < ns; ++i) {
        std::vector<std::vector<Rat>> m(ns, std::vector<Rat>(rank_ + 1, 0));
        for (int j = 0; j < ns; ++j) {
            for (int k = 0; k < rank_; ++k) m[j][k] = positive_roots_[simple_indices_[j]][k];
            m[j][rank_] = (i == j) ? 1 : 0;
        }
        // Gaussian elimination, free variables set to zero
        std::vector<int> pivot_col(ns, -1);
        int row = 0;
        for (int col = 0; col < rank_ && row < ns; ++col) {
            int p = -1;
            for (int r = row; r < ns; ++r)
                if (m[r][col] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            std::swap(m[p], m[row]);
            Rat lead = m[row][col];
            for (int k = col; k <= rank_; ++k) m[row][k] /= lead;
            for (int r = 0; r < ns; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int k = col; k <= rank_; ++k) m[r][k] -= f * m[row][k];
            }
            pivot_col[row] = col;
            ++row;
        }
        for (int r = row; r < ns; ++r)
            if (m[r][rank_] != 0) throw invalid_datum("simple roots are linearly dependent");
        std::vector<Rat> x(rank_, 0);
        for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][rank_];
        Int denom = 1;
        for (const auto& v : x) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(v));
        Coweight f(rank_);
        for (int k = 0; k < rank_; ++k) {
            Rat scaled = x[k] * Rat(denom);
            f[k] = static_cast<int>(boost::multiprecision::numerator(scaled).convert_to<long>());
        }
        cone_reps_.push_back(f);
        cone_scales_.push_back(static_cast<long>(denom.convert_to<long>()));
    }
}

int RootDatum::weyl_mul(int a, int b) const { return weyl_mult_[a][b]; }

std::vector<FiniteWeylElt> RootDatum::weyl_elements() const {
    std::vector<FiniteWeylElt> out;
    out.reserve(weyl_order());
    for (int w = 0; w < weyl_order(); ++w) out.push_back({weyl_action_[w], weyl_length_[w]});
    return out;
}

std::string RootDatum::weyl_to_string(int w) const {
    std::ostringstream os;
    os << "[";
    const IntMat& m = weyl_action_[w];
    for (int i = 0; i < rank_; ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < rank_; ++j) {
            if (j) os << ",";
            os << m[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string RootDatum::ext_to_string(const ExtAffWeylElt& x) const {
    std::ostringstream os;
    os << "(" << coweight_to_string(x.lambda) << " | " << weyl_to_string(x.w) << ")";
    return os.str();
}

bool RootDatum::is_antidominant(const Coweight& lambda) const {
    for (const auto& a : positive_roots_)
        if (pairing(a, lambda) < 0) return false;
    return true;
}

bool RootDatum::is_central(const Coweight& lambda) const {
    for (const auto& a : positive_roots_)
        if (pairing(a, lambda) != 0) return false;
    return true;
}

ExtAffWeylElt RootDatum::ext_mul(const ExtAffWeylElt& a, const ExtAffWeylElt& b) const {
    return {a.lambda + act(a.w, b.lambda), weyl_mul(a.w, b.w)};
}

ExtAffWeylElt RootDatum::ext_inv(const ExtAffWeylElt& a) const {
    int wi = weyl_inv(a.w);
    Coweight l = act(wi, a.lambda);
    for (auto& x : l) x = -x;
    return {std::move(l), wi};
}

long RootDatum::ext_length(const ExtAffWeylElt& x) const {
    long len = 0;
    const auto& flips = inv_flips_root_[x.w];
    for (int r = 0; r < num_positive_roots(); ++r) {
        long p = pairing(positive_roots_[r], x.lambda);
        len += flips[r] ? std::labs(p - 1) : std::labs(p);
    }
    return len;
}

RootDatum::Decomposition RootDatum::decompose(const ExtAffWeylElt& x) const {
    Decomposition d;
    ExtAffWeylElt cur = x;
    long len = ext_length(cur);
    while (len > 0) {
        bool found = false;
        for (size_t g = 0; g < affine_gens_.size(); ++g) {
            ExtAffWeylElt next = ext_mul(cur, affine_gens_[g]);
            long nl = ext_length(next);
            if (nl == len - 1) {
                d.word.push_back(static_cast<int>(g));
                cur = std::move(next);
                len = nl;
                found = true;
                break;
            }
        }
        if (!found)
            throw invalid_datum("no right descent found at length " + std::to_string(len));
    }
    d.omega = std::move(cur);
    return d;
}

GroupAlgElt RootDatum::dot_act(int w, const GroupAlgElt& r) const {
    GroupAlgElt out(rank_);
    for (const auto& [lambda, c] : r.terms()) {
        Coweight img = act(w, lambda);
        long vexp = pairing_2rho(lambda) - pairing_2rho(img);
        LaurentPoly shifted;
        shifted.add_scaled(c, 1, static_cast<int>(vexp));
        out.add_term(img, shifted);
    }
    return out;
}

std::vector<Coweight> RootDatum::orbit(const Coweight& lambda) const {
    std::set<Coweight> seen;
    std::vector<Coweight> out;
    for (int w = 0; w < weyl_order(); ++w) {
        Coweight img = act(w, lambda);
        if (seen.insert(img).second) out.push_back(std::move(img));
    }
    return out;
}

GroupAlgElt RootDatum::dot_orbit_sum(const Coweight& lambda) const {
    GroupAlgElt out(rank_);
    long base = pairing_2rho(lambda);
    for (const auto& img : orbit(lambda)) {
        long vexp = base - pairing_2rho(img);
        out.add_term(img, LaurentPoly::v_power(static_cast<int>(vexp)));
    }
    return out;
}

bool RootDatum::is_dot_invariant(const GroupAlgElt& r) const {
    for (int w = 0; w < weyl_order(); ++w)
        if (dot_act(w, r) != r) return false;
    return true;
}

RootDatum RootDatum::gl2() {
    return RootDatum("gl2", 2, {{1, -1}}, {0}, {{1, -1}});
}

RootDatum RootDatum::sl2() {
    return RootDatum("sl2", 1, {{2}}, {0}, {{1}});
}

RootDatum RootDatum::pgl2() {
    return RootDatum("pgl2", 1, {{1}}, {0}, {{2}});
}

RootDatum RootDatum::gl3() {
    return RootDatum("gl3", 3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, {0, 1},
                     {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});
}

RootDatum RootDatum::sl3() {
    // coordinates in the basis of simple coroots
    return RootDatum("sl3", 2, {{2, -1}, {-1, 2}, {1, 1}}, {0, 1}, {{1, 0}, {0, 1}, {1, 1}});
}

RootDatum RootDatum::sp4() {
    // type C2: short simple e1-e2, long simple 2e2
    return RootDatum("sp4", 2, {{1, -1}, {0, 2}, {1, 1}, {2, 0}}, {0, 1},
                     {{1, -1}, {0, 1}, {1, 1}, {1, 0}});
}

RootDatum RootDatum::preset(const std::string& name) {
    if (name == "gl2") return gl2();
    if (name == "sl2") return sl2();
    if (name == "pgl2") return pgl2();
    if (name == "gl3") return gl3();
    if (name == "sl3") return sl3();
    if (name == "sp4") return sp4();
    throw config_error("unknown preset group '" + name + "'");
}

std::vector<std::string> RootDatum::preset_names() {
    return {"gl2", "sl2", "pgl2", "gl3", "sl3", "sp4"};
}

}  // namespace uop
