#include "uoplab/tree.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uop {

TreeVertex TreeVertex::of(std::initializer_list<int> digits) {
    TreeVertex v;
    for (int d : digits) v.a.push_back(static_cast<uint8_t>(d));
    return v;
}

TreeVertex TreeVertex::parse(const std::string& s) {
    TreeVertex v;
    if (s == "-" || s.empty()) return v;
    for (char c : s) {
        if (c < '0' || c > '9') throw parse_error("vertex address digit '" + std::string(1, c) + "'");
        v.a.push_back(static_cast<uint8_t>(c - '0'));
    }
    return v;
}

std::string TreeVertex::to_string() const {
    if (a.empty()) return "-";
    std::string s;
    for (uint8_t d : a) s.push_back(static_cast<char>('0' + d));
    return s;
}

void vs_add(VertexSum& a, const TreeVertex& v, long long c) {
    if (c == 0) return;
    auto it = a.find(v);
    if (it == a.end()) {
        a.emplace(v, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

void vs_add(VertexSum& a, const VertexSum& b, long long c) {
    for (const auto& [v, w] : b) vs_add(a, v, w * c);
}

VertexSum vs_scale(const VertexSum& a, long long c) {
    VertexSum r;
    if (c != 0)
        for (const auto& [v, w] : a) r.emplace(v, w * c);
    return r;
}

std::string vs_to_json(const VertexSum& a) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, c] : a) {
        if (!first) os << ",";
        first = false;
        os << "\"" << v.to_string() << "\":" << c;
    }
    os << "}";
    return os.str();
}

BaseConfig base_config_from_string(const std::string& s) {
    if (s == "inert") return BaseConfig::inert;
    if (s == "ramified") return BaseConfig::ramified;
    if (s == "split") return BaseConfig::split;
    throw config_error("unknown base configuration '" + s + "'");
}

TreeModel::TreeModel(int q, int depth) : q_(q), depth_(depth) {
    if (q < 2) throw config_error("tree requires q >= 2");
    if (depth < 2) throw config_error("tree requires depth >= 2");
}

bool TreeModel::on_apartment(const TreeVertex& v) const {
    if (v.a.empty()) return true;
    size_t start = v.a[0] == 1 ? 1 : 0;
    if (v.a[0] > 1) return false;
    for (size_t i = start; i < v.a.size(); ++i)
        if (v.a[i] != 0) return false;
    return true;
}

long TreeModel::level(const TreeVertex& v) const {
    size_t zeros = 0;
    while (zeros < v.a.size() && v.a[zeros] == 0) ++zeros;
    return static_cast<long>(v.a.size()) - 2 * static_cast<long>(zeros);
}

TreeVertex TreeModel::parent(const TreeVertex& v) const {
    TreeVertex p = v;
    p.a.pop_back();
    return p;
}

void TreeModel::require_expandable(const TreeVertex& v) const {
    if (static_cast<int>(v.len()) >= depth_)
        throw boundary_clipped("vertex " + v.to_string() + " touches the truncation radius");
}

std::vector<TreeVertex> TreeModel::neighbors(const TreeVertex& v) const {
    require_expandable(v);
    std::vector<TreeVertex> out;
    if (!v.a.empty()) out.push_back(parent(v));
    const int first = v.a.empty() ? q_ : q_ - 1;
    for (int d = 0; d <= first; ++d) {
        TreeVertex c = v;
        c.a.push_back(static_cast<uint8_t>(d));
        out.push_back(std::move(c));
    }
    return out;
}

VertexSum TreeModel::hecke_T(const VertexSum& x) const {
    VertexSum out;
    for (const auto& [v, c] : x)
        for (const auto& n : neighbors(v)) vs_add(out, n, c);
    return out;
}

VertexSum TreeModel::successor_u(const TreeVertex& v) const {
    const long h = level(v);
    VertexSum out;
    for (const auto& n : neighbors(v))
        if (level(n) == h + 1) vs_add(out, n, 1);
    if (static_cast<int>(out.size()) != q_)
        throw check_failure("successor count is not q at " + v.to_string());
    return out;
}

VertexSum TreeModel::successor_u(const VertexSum& x) const {
    VertexSum out;
    for (const auto& [v, c] : x) vs_add(out, successor_u(v), c);
    return out;
}

TreeVertex TreeModel::predecessor_v(const TreeVertex& v) const {
    bool all_zero = true;
    for (uint8_t d : v.a) all_zero &= (d == 0);
    if (all_zero) {
        require_expandable(v);
        TreeVertex p = v;
        p.a.push_back(0);
        return p;
    }
    return parent(v);
}

VertexSum TreeModel::predecessor_v(const VertexSum& x) const {
    VertexSum out;
    for (const auto& [v, c] : x) vs_add(out, predecessor_v(v), c);
    return out;
}

TreeVertex TreeModel::retraction(const TreeVertex& v) const {
    if (v.a.empty()) return v;
    const size_t n = v.a.size();
    TreeVertex out;
    if (v.a[0] == 0) {
        // geodesic meets the alcove at the vertex "0" after n-1 edges
        out.a.assign(n, 0);
    } else {
        // geodesic meets the alcove at the origin after n edges
        out.a.assign(n, 0);
        out.a[0] = 1;
    }
    return out;
}

VertexSum TreeModel::fiber_operator_U(int k, const TreeVertex& v) const {
    if (k <= 0) throw config_error("fiber operator needs k >= 1");
    if (static_cast<int>(v.len()) + k > depth_)
        throw boundary_clipped("k-step fiber of " + v.to_string() + " leaves the truncation");
    // grow away from the alcove {v, predecessor(v)}
    std::vector<std::pair<TreeVertex, TreeVertex>> frontier = {{v, predecessor_v(v)}};
    for (int step = 0; step < k; ++step) {
        std::vector<std::pair<TreeVertex, TreeVertex>> next;
        for (const auto& [cur, from] : frontier)
            for (const auto& n : neighbors(cur))
                if (n != from) next.emplace_back(n, cur);
        frontier = std::move(next);
    }
    VertexSum out;
    for (const auto& [cur, from] : frontier) vs_add(out, cur, 1);
    return out;
}

VertexSum TreeModel::fiber_operator_U(int k, const VertexSum& x) const {
    VertexSum out;
    for (const auto& [v, c] : x) vs_add(out, fiber_operator_U(k, v), c);
    return out;
}

VertexSum TreeModel::beta_filtration(int k, const TreeVertex& b) const {
    if (k <= 0) throw config_error("filtration operator needs k >= 1");
    if (static_cast<int>(b.len()) + k > depth_)
        throw boundary_clipped("k-step filtration fiber of " + b.to_string() +
                               " leaves the truncation");
    VertexSum out;
    for (const auto& a : vertices_up_to(depth_)) {
        TreeVertex cur = a;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            bool all_zero = true;
            for (uint8_t d : cur.a) all_zero &= (d == 0);
            if (all_zero && static_cast<int>(cur.len()) >= depth_) {
                ok = false;  // ray exits the truncation, cannot reach b
                break;
            }
            cur = predecessor_v(cur);
        }
        if (ok && cur == b) vs_add(out, a, 1);
    }
    VertexSum via_fiber = fiber_operator_U(k, b);
    if (out != via_fiber)
        throw check_failure("filtration fiber disagrees with the retraction fiber at " +
                            b.to_string());
    return out;
}

long TreeModel::conductor(BaseConfig cfg, const TreeVertex& v) const {
    const long n = static_cast<long>(v.len());
    switch (cfg) {
        case BaseConfig::inert:
            return n;
        case BaseConfig::ramified:
            return (n > 0 && v.a[0] == 0) ? n - 1 : n;
        case BaseConfig::split: {
            // distance to the apartment = depth beyond the longest prefix
            // of the form 0^m or 1 0^m
            if (n == 0) return 0;
            size_t best = 0;
            if (v.a[0] == 0 || v.a[0] == 1) {
                best = 1;
                while (best < v.a.size() && v.a[best] == 0) ++best;
            }
            return n - static_cast<long>(best);
        }
    }
    return 0;
}

VertexSum TreeModel::trace_orbit(BaseConfig cfg, const TreeVertex& z) const {
    const long n = conductor(cfg, z);
    if (n < 2)
        throw conductor_too_small("trace orbit needs conductor >= 2; " + z.to_string() +
                                  " has conductor " + std::to_string(n));
    auto step_down = [&](const TreeVertex& v, long c) -> TreeVertex {
        TreeVertex found;
        int count = 0;
        for (const auto& nb : neighbors(v))
            if (conductor(cfg, nb) == c) {
                found = nb;
                ++count;
            }
        if (count != 1)
            throw check_failure("conductor step-down is not unique at " + v.to_string());
        return found;
    };
    TreeVertex z1 = step_down(z, n - 1);
    TreeVertex z2 = step_down(z1, n - 2);
    VertexSum out;
    for (const auto& w : neighbors(z1))
        if (conductor(cfg, w) == n) vs_add(out, w, 1);
    // the orbit is exactly T(z') - z'' and contains z
    VertexSum check = hecke_T(VertexSum{{z1, 1}});
    vs_add(check, z2, -1);
    if (out != check || !out.count(z))
        throw check_failure("trace orbit does not match T(z') - z'' at " + z.to_string());
    return out;
}

std::vector<TreeVertex> TreeModel::vertices_up_to(int max_len) const {
    std::vector<TreeVertex> out = {TreeVertex::origin()};
    size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            const int first = out[i].a.empty() ? q_ : q_ - 1;
            for (int d = 0; d <= first; ++d) {
                TreeVertex c = out[i];
                c.a.push_back(static_cast<uint8_t>(d));
                out.push_back(std::move(c));
            }
        }
        begin = end;
    }
    return out;
}

TreeIdentityReport TreeModel::check_at(const TreeVertex& v) const {
    TreeIdentityReport r;
    r.vertices_checked = 1;
    const VertexSum dv{{v, 1}};

    VertexSum u1 = successor_u(dv);
    VertexSum vu = predecessor_v(u1);
    r.pred_succ_is_q_id = (vu == vs_scale(dv, q_));

    VertexSum uv = successor_u(VertexSum{{predecessor_v(v), 1}});
    if (uv != vs_scale(dv, q_)) r.succ_pred_differs = true;

    VertexSum tv = hecke_T(dv);
    VertexSum upv = u1;
    vs_add(upv, predecessor_v(v), 1);
    r.adjacency_splits = (tv == upv);

    VertexSum uu = successor_u(u1);
    VertexSum tu = hecke_T(u1);
    VertexSum right = uu;
    vs_add(right, tu, -1);
    vs_add(right, dv, q_);
    r.right_root = right.empty();

    VertexSum ut = successor_u(tv);
    if (tu != ut) r.noncomm_witness = true;

    VertexSum vv = predecessor_v(predecessor_v(dv));
    VertexSum vt = predecessor_v(tv);
    VertexSum left = vv;
    vs_add(left, vt, -1);
    vs_add(left, dv, q_);
    r.left_root = left.empty();
    return r;
}

TreeIdentityReport TreeModel::check_identities(int boundary_margin, bool parallel) const {
    const auto verts = vertices_up_to(depth_ - boundary_margin);
    TreeIdentityReport total;
    total.vertices_checked = 0;

    auto merge = [](TreeIdentityReport& a, const TreeIdentityReport& b) {
        a.pred_succ_is_q_id &= b.pred_succ_is_q_id;
        a.succ_pred_differs |= b.succ_pred_differs;
        a.adjacency_splits &= b.adjacency_splits;
        a.right_root &= b.right_root;
        a.left_root &= b.left_root;
        a.noncomm_witness |= b.noncomm_witness;
        a.vertices_checked += b.vertices_checked;
    };

    if (parallel) {
#ifdef _OPENMP
        const long n = static_cast<long>(verts.size());
#pragma omp parallel
        {
            TreeIdentityReport local;
            local.vertices_checked = 0;
#pragma omp for schedule(static) nowait
            for (long i = 0; i < n; ++i) merge(local, check_at(verts[i]));
#pragma omp critical(uoplab_tree_merge)
            merge(total, local);
        }
        return total;
#endif
    }
    for (const auto& v : verts) merge(total, check_at(v));
    return total;
}

bool TreeModel::noncommutativity_witness() const {
    if (depth_ < 4) throw config_error("witness search needs depth >= 4");
    TreeIdentityReport r = check_identities(2, false);
    return r.noncomm_witness && r.right_root && r.left_root;
}

}  // namespace uop
