#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uoplab/tree.hpp"
#include "uoplab/uops.hpp"

namespace uop {

struct CheckResult {
    std::string name;
    bool pass = false;
    double millis = 0.0;
    std::string detail;
};

struct SuiteOptions {
    int box = 2;
    uint64_t seed = 12345;
    bool parallel = false;
    int assoc_triples = 200;
    int bernstein_len = 5;
    int center_len = 4;
    int center_samples = 5;
};

/// Random-element property layer for the coefficient rings.
std::vector<CheckResult> run_coeffs_suite(uint64_t seed, int cases);

/// Weyl group, lengths and dot-action checks for one datum.
std::vector<CheckResult> run_rootdata_suite(const RootDatum& d, const SuiteOptions& opt);

/// T-basis multiplication, theta, Bernstein form and centrality checks.
std::vector<CheckResult> run_hecke_suite(const RootDatum& d, const SuiteOptions& opt);

/// Satake transform: invariance of images, multiplicativity, inversion.
std::vector<CheckResult> run_satake_suite(const RootDatum& d, const SuiteOptions& opt);

/// Certificate construction and all of its verification layers.
std::vector<CheckResult> run_integrality_suite(const RootDatum& d, const Coweight& lambda,
                                               const SuiteOptions& opt,
                                               IntegralityCertificate* cert_out = nullptr);

/// Tree operator identities, fibers, filtration, conductor and trace.
std::vector<CheckResult> run_tree_suite(int q, int depth, const SuiteOptions& opt);

/// Extended affine Weyl elements with coordinates in [-coord_bound,
/// coord_bound] and length at most len_bound.
std::vector<ExtAffWeylElt> elements_in_box(const RootDatum& d, int coord_bound, long len_bound);

/// First antidominant nonzero coweight in the box ordering; used as the
/// default certificate index when none is given.
Coweight default_antidominant(const RootDatum& d);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace uop
