// Compares the serial reference sweeps against the OpenMP kernels on the
// two heaviest verification loops: tree identity sweeps and theta
// additivity boxes.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uoplab/hecke.hpp"
#include "uoplab/tree.hpp"
#include "uoplab/verify.hpp"

using namespace uop;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_tree(int q, int depth) {
    TreeModel t(q, depth);

    auto t0 = Clock::now();
    TreeIdentityReport serial = t.check_identities(2, false);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    TreeIdentityReport parallel = t.check_identities(2, true);
    double parallel_ms = ms_since(t0);

    bool agree = serial.all_identities() == parallel.all_identities() &&
                 serial.vertices_checked == parallel.vertices_checked;
    std::cout << "tree q=" << q << " depth=" << depth << ": " << serial.vertices_checked
              << " vertices, serial " << serial_ms << " ms, omp " << parallel_ms << " ms, "
              << (agree ? "results agree" : "RESULTS DISAGREE") << "\n";
}

void bench_theta(const std::string& group, int box) {
    RootDatum d = RootDatum::preset(group);

    SuiteOptions opt;
    opt.box = box;

    opt.parallel = false;
    auto serial = run_hecke_suite(d, opt);
    double serial_ms = serial.front().millis;

    opt.parallel = true;
    auto parallel = run_hecke_suite(d, opt);
    double parallel_ms = parallel.front().millis;

    bool agree = serial.front().pass == parallel.front().pass;
    std::cout << "theta box " << group << " box=" << box << ": serial " << serial_ms
              << " ms, omp " << parallel_ms << " ms, "
              << (agree ? "results agree" : "RESULTS DISAGREE") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial loop\n";
#endif
    bench_tree(2, 10);
    bench_tree(3, 9);
    bench_theta("gl2", 3);
    bench_theta("sl3", 2);
    return 0;
}
