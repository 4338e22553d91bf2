#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

#include "uoplab/datum_io.hpp"
#include "uoplab/verify.hpp"

namespace {

using namespace uop;

struct CliOptions {
    std::string group = "gl2";
    std::vector<std::string> suites;
    std::string lambda_csv;
    int q = 2;
    int depth = 8;
    std::string output = "text";
    bool parallel = false;
    std::string emit_cert;
    int box = 2;
    uint64_t seed = 12345;
};

Coweight parse_lambda(const std::string& csv, int rank) {
    Coweight l;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (cur.empty()) throw config_error("empty coordinate in --lambda");
            l.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (static_cast<int>(l.size()) != rank)
        throw config_error("--lambda has " + std::to_string(l.size()) +
                           " coordinates, group has rank " + std::to_string(rank));
    return l;
}

void print_results(const std::vector<CheckResult>& results, const std::string& output) {
    if (output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results)
            j.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"millis", r.millis},
                         {"detail", r.detail}});
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(36) << r.name
                  << std::right << std::fixed << std::setprecision(1) << std::setw(9) << r.millis
                  << " ms";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
    }
}

int run_suites(const CliOptions& opt) {
    std::vector<std::string> suites = opt.suites;
    if (suites.empty()) suites = {"coeffs", "rootdata", "hecke", "satake", "integrality", "tree"};

    SuiteOptions sopt;
    sopt.box = opt.box;
    sopt.seed = opt.seed;
    sopt.parallel = opt.parallel;

    std::vector<CheckResult> all;
    std::optional<RootDatum> datum;
    auto need_datum = [&]() -> const RootDatum& {
        if (!datum) datum.emplace(resolve_group(opt.group));
        return *datum;
    };

    for (const auto& suite : suites) {
        if (suite == "coeffs") {
            auto r = run_coeffs_suite(opt.seed, 500);
            all.insert(all.end(), r.begin(), r.end());
        } else if (suite == "rootdata") {
            auto r = run_rootdata_suite(need_datum(), sopt);
            all.insert(all.end(), r.begin(), r.end());
        } else if (suite == "hecke") {
            auto r = run_hecke_suite(need_datum(), sopt);
            all.insert(all.end(), r.begin(), r.end());
        } else if (suite == "satake") {
            auto r = run_satake_suite(need_datum(), sopt);
            all.insert(all.end(), r.begin(), r.end());
        } else if (suite == "integrality") {
            const RootDatum& d = need_datum();
            Coweight lambda = opt.lambda_csv.empty() ? default_antidominant(d)
                                                     : parse_lambda(opt.lambda_csv, d.rank());
            IntegralityCertificate cert;
            auto r = run_integrality_suite(d, lambda, sopt, &cert);
            all.insert(all.end(), r.begin(), r.end());
            if (!opt.emit_cert.empty()) write_certificate(cert, opt.emit_cert);
        } else if (suite == "tree") {
            auto r = run_tree_suite(opt.q, opt.depth, sopt);
            all.insert(all.end(), r.begin(), r.end());
        } else {
            throw config_error("unknown suite '" + suite + "'");
        }
    }

    print_results(all, opt.output);
    return all_passed(all) ? 0 : 1;
}

int run_integrality_command(const CliOptions& opt) {
    RootDatum d = resolve_group(opt.group);
    if (opt.lambda_csv.empty()) throw config_error("integrality needs --lambda");
    Coweight lambda = parse_lambda(opt.lambda_csv, d.rank());
    if (!d.is_antidominant(lambda))
        throw not_antidominant("certificates are indexed by the antidominant cone; got " +
                               coweight_to_string(lambda));

    SuiteOptions sopt;
    sopt.parallel = opt.parallel;
    IntegralityCertificate cert;
    auto results = run_integrality_suite(d, lambda, sopt, &cert);
    if (!opt.emit_cert.empty()) write_certificate(cert, opt.emit_cert);

    if (opt.output == "json") {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else {
        std::cout << "group " << cert.group << ", lambda " << coweight_to_string(cert.lambda)
                  << ", degree " << cert.degree << "\n";
        for (auto it = cert.coefficients.rbegin(); it != cert.coefficients.rend(); ++it) {
            std::cout << "  X^" << it->power << ": ";
            if (it->spherical.empty()) std::cout << "0";
            bool first = true;
            for (const auto& [cw, w] : it->spherical) {
                if (!first) std::cout << " + ";
                first = false;
                std::string ws = w.to_string();
                std::cout << (w.terms().size() > 1 ? "(" + ws + ")" : ws) << " * sph"
                          << coweight_to_string(cw);
            }
            std::cout << "\n";
        }
        print_results(results, opt.output);
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Iwahori-Hecke / Satake / tree-operator verification"};
    app.require_subcommand(1);

    CliOptions opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", opt.group, "preset name or path to a datum JSON file");
        cmd->add_option("--lambda", opt.lambda_csv, "coweight, comma separated");
        cmd->add_option("--q", opt.q, "residue cardinality for the tree suite");
        cmd->add_option("--depth", opt.depth, "tree truncation radius");
        cmd->add_option("--output", opt.output, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--parallel", opt.parallel, "run independent cases in parallel");
        cmd->add_option("--emit-cert", opt.emit_cert, "write the certificate JSON here");
        cmd->add_option("--box", opt.box, "coordinate box radius for property suites");
        cmd->add_option("--seed", opt.seed, "seed for randomized property tests");
    };

    const std::string suites_help = "subset of coeffs,rootdata,hecke,satake,integrality,tree";

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suites", opt.suites, suites_help)->delimiter(',');
    add_common(verify);

    CLI::App* integ = app.add_subcommand("integrality", "build and verify one certificate");
    add_common(integ);

    CLI::App* tree = app.add_subcommand("tree", "run the tree operator suite");
    tree->add_option("--suites", opt.suites, suites_help)->delimiter(',');
    add_common(tree);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) return run_suites(opt);
        if (app.got_subcommand(integ)) return run_integrality_command(opt);
        if (app.got_subcommand(tree)) {
            if (opt.suites.empty()) opt.suites = {"tree"};
            return run_suites(opt);
        }
    } catch (const uop::not_antidominant& e) {
        std::cerr << e.what()
                  << "\nhint: certificates are indexed by the antidominant cone; pick lambda with "
                     "<lambda, alpha> >= 0 for every positive root alpha\n";
        return 2;
    } catch (const uop::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
