#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uoplab/errors.hpp"

namespace uop {

/// Address of a vertex in the truncated (q+1)-regular tree: first digit
/// in 0..q, later digits in 0..q-1, empty address = origin. The marked
/// end is the all-zero ray, the marked apartment is {0^k} u {1 0^k}, and
/// the marked alcove is the edge {origin, "0"}.
struct TreeVertex {
    std::vector<uint8_t> a;

    size_t len() const { return a.size(); }
    bool operator==(const TreeVertex& o) const { return a == o.a; }
    bool operator!=(const TreeVertex& o) const { return a != o.a; }
    bool operator<(const TreeVertex& o) const { return a < o.a; }

    static TreeVertex origin() { return {}; }
    static TreeVertex of(std::initializer_list<int> digits);
    static TreeVertex parse(const std::string& s);
    std::string to_string() const;
};

using VertexSum = std::map<TreeVertex, long long>;

void vs_add(VertexSum& a, const TreeVertex& v, long long c);
void vs_add(VertexSum& a, const VertexSum& b, long long c = 1);
VertexSum vs_scale(const VertexSum& a, long long c);
/// JSON object text mapping each address string to its weight.
std::string vs_to_json(const VertexSum& a);

enum class BaseConfig { inert, ramified, split };
BaseConfig base_config_from_string(const std::string& s);

/// Results of an identity sweep over the interior of the truncated tree.
struct TreeIdentityReport {
    bool pred_succ_is_q_id = true;    // v o u = q Id
    bool succ_pred_differs = false;   // u o v != q Id somewhere
    bool adjacency_splits = true;     // T = u + v
    bool right_root = true;           // u^2 - T o u + q = 0
    bool left_root = true;            // v^2 - v o T + q = 0
    bool noncomm_witness = false;     // T o u != u o T somewhere
    long long vertices_checked = 0;

    bool all_identities() const {
        return pred_succ_is_q_id && succ_pred_differs && adjacency_splits && right_root &&
               left_root && noncomm_witness;
    }
};

/// Truncated (q+1)-regular tree with marked end, apartment and alcove.
/// Operators are partial: any evaluation whose support would leave the
/// truncation radius raises BoundaryClipped instead of clipping.
class TreeModel {
public:
    TreeModel(int q, int depth);

    int q() const { return q_; }
    int depth() const { return depth_; }

    bool in_model(const TreeVertex& v) const { return static_cast<int>(v.len()) <= depth_; }
    bool on_apartment(const TreeVertex& v) const;
    /// Horocycle level toward the marked end (origin at level 0).
    long level(const TreeVertex& v) const;

    std::vector<TreeVertex> neighbors(const TreeVertex& v) const;
    VertexSum hecke_T(const VertexSum& x) const;

    /// Sum of the q neighbors one horocycle further from the marked end.
    VertexSum successor_u(const TreeVertex& v) const;
    VertexSum successor_u(const VertexSum& x) const;
    /// The unique neighbor one horocycle closer to the marked end.
    TreeVertex predecessor_v(const TreeVertex& v) const;
    VertexSum predecessor_v(const VertexSum& x) const;

    /// Retraction onto the marked apartment based at the marked alcove.
    TreeVertex retraction(const TreeVertex& v) const;

    /// Fiber sum of the alcove-based retraction at the k-step translate:
    /// vertices reached from v in exactly k steps never moving toward the
    /// marked end.
    VertexSum fiber_operator_U(int k, const TreeVertex& v) const;
    VertexSum fiber_operator_U(int k, const VertexSum& x) const;

    /// All vertices whose ray toward the marked end passes through b
    /// after exactly k steps.
    VertexSum beta_filtration(int k, const TreeVertex& b) const;

    /// Distance to the base set of the chosen configuration: vertex,
    /// alcove edge, or the whole marked apartment.
    long conductor(BaseConfig cfg, const TreeVertex& v) const;

    /// For c(z) = n >= 2: the sum of the conductor-n neighbors of the
    /// step-down vertex z'; equals T(z') - z'' and contains z.
    VertexSum trace_orbit(BaseConfig cfg, const TreeVertex& z) const;

    bool noncommutativity_witness() const;

    std::vector<TreeVertex> vertices_up_to(int max_len) const;

    /// Interior identity sweep; `parallel` switches between the serial
    /// reference loop and the OpenMP kernel (results must agree).
    TreeIdentityReport check_identities(int boundary_margin, bool parallel) const;

private:
    TreeVertex parent(const TreeVertex& v) const;
    void require_expandable(const TreeVertex& v) const;
    TreeIdentityReport check_at(const TreeVertex& v) const;

    int q_;
    int depth_;
};

}  // namespace uop
