// Command-line front end: exact tuple counts, Z-function evaluation and
// expansion, the constants pipeline, saddle-point estimates, quadrature
// validation of the exact two-contour identity, and log-concavity scans.
// JSON on stdout (CSV for the tables on request); deterministic output.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitasym/constants_pipeline.hpp"
#include "orbitasym/enumeration.hpp"
#include "orbitasym/errors.hpp"
#include "orbitasym/logconcavity.hpp"
#include "orbitasym/saddle_point.hpp"
#include "orbitasym/special_values.hpp"
#include "orbitasym/zfunctions.hpp"

using nlohmann::json;
using namespace orbitasym;

namespace {

json table_to_json(const CountTable& table) {
    return json::parse(table.to_json());
}

std::vector<double> parse_alphas(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

json expansion_to_json(const AsymptoticExpansion& e) {
    json terms = json::array();
    for (const ExpansionTerm& t : e.terms)
        terms.push_back({{"a", t.a}, {"b", t.b}, {"coeff", t.coeff}});
    return terms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitasym: commuting-permutation tuple counts and their asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    double eps = 1e-12;
    int threads = 1;
    app.add_option("--format", format, "Output format: json or csv")
        ->envname("ORBITASYM_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--eps", eps, "Accuracy target for direct summation")
        ->envname("ORBITASYM_EPS")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads for quadrature")
        ->envname("ORBITASYM_THREADS")
        ->check(CLI::PositiveNumber);

    int ell = 2, max_n = 10, n = 0, k = 0, m = 1, grid = 64, order = 10, k_single = -1;
    double t = 1.0;
    std::string alphas_csv;
    bool with_exact = false, all_k = false, special = false;

    auto* cmd_count = app.add_subcommand("count", "Exact table A(ell,n,k), 0 <= k <= n <= max-n");
    cmd_count->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_count->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);

    auto* cmd_brute = app.add_subcommand("brute", "Brute-force row A(ell,n,.) (small n)");
    cmd_brute->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_brute->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

    auto* cmd_zeval = app.add_subcommand("zeval", "Direct evaluation of Z^{[ell]}_alphas(t)");
    cmd_zeval->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
    cmd_zeval->add_option("--alphas", alphas_csv, "Comma-separated alphas (ell entries)");
    cmd_zeval->add_option("--t", t)->required();

    auto* cmd_zexpand = app.add_subcommand("zexpand", "Staircase expansion terms of Z_m^{[ell]}");
    cmd_zexpand->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_zexpand->add_option("--m", m)->required();
    cmd_zexpand->add_option("--order", order, "Largest exponent a to include");

    auto* cmd_constants = app.add_subcommand("constants", "Constants pipeline bundle");
    cmd_constants->add_option("--ell", ell)->check(CLI::PositiveNumber);
    cmd_constants->add_option("--order", order)->check(CLI::PositiveNumber);
    cmd_constants->add_flag("--special", special, "Dump named special values instead");

    auto* cmd_estimate = app.add_subcommand("estimate", "Asymptotic estimate of A(ell,n,k)");
    cmd_estimate->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_estimate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cmd_estimate->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cmd_estimate->add_flag("--exact", with_exact, "Also compute the exact table and its log");

    auto* cmd_validate = app.add_subcommand("validate-saddle", "Quadrature check of A/n! = M * I");
    cmd_validate->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_validate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cmd_validate->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cmd_validate->add_option("--grid", grid)->check(CLI::PositiveNumber);

    auto* cmd_logc = app.add_subcommand("logconcavity", "Exact log-concavity scan of a row");
    cmd_logc->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cmd_logc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cmd_logc->add_flag("--all-k", all_k, "Check every 2 <= k <= n-1 (default)");
    cmd_logc->add_option("--k", k_single, "Check a single k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the diagnostic / help text
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_count->parsed()) {
            const CountTable table = count_table(ell, max_n);
            if (format == "csv")
                std::cout << table.to_csv();
            else
                std::cout << table_to_json(table).dump() << "\n";
        } else if (cmd_brute->parsed()) {
            const CountTable table = brute_force_table(ell, n);
            if (format == "csv")
                std::cout << table.to_csv();
            else
                std::cout << table_to_json(table).dump() << "\n";
        } else if (cmd_zeval->parsed()) {
            ZSpec spec;
            spec.ell = ell;
            spec.alphas = parse_alphas(alphas_csv);
            const ZDirectResult r = z_direct_info(spec, t, eps);
            std::cout << json{{"value", r.value}, {"terms_used", r.terms_used}}.dump() << "\n";
        } else if (cmd_zexpand->parsed()) {
            const AsymptoticExpansion e = staircase_expansion(ell, m, order);
            std::cout << json{{"ell", ell}, {"m", m}, {"terms", expansion_to_json(e)}}.dump() << "\n";
        } else if (cmd_constants->parsed()) {
            if (special) {
                const auto& sv = special_values();
                json out = {{"zeta(0)", sv.zeta(0)},      {"zeta'(0)", sv.zeta_deriv(0)},
                            {"zeta'(-1)", sv.zeta_deriv(-1)}, {"zeta'(-2)", sv.zeta_deriv(-2)}};
                for (int i = 0; i <= 4; ++i) out["gamma_" + std::to_string(i)] = sv.stieltjes(i);
                for (int l = 2; l <= 6; ++l) out["K_" + std::to_string(l)] = sv.k_ell(l);
                std::cout << out.dump() << "\n";
            } else {
                const ConstantsBundle bundle = constants_bundle(ell, order);
                json values = json::object();
                for (const auto& [name, v] : bundle.values) values[name] = v;
                json inter = json::object();
                for (const auto& [name, seq] : bundle.intermediates) inter[name] = seq;
                std::cout << json{{"ell", bundle.ell},
                                  {"kind", bundle.kind},
                                  {"values", values},
                                  {"intermediates", inter}}
                                 .dump()
                          << "\n";
            }
        } else if (cmd_estimate->parsed()) {
            json out;
            if (with_exact) {
                const CountTable table = count_table(ell, n);
                const EstimateReport rep = estimate(ell, n, k, &table);
                out = {{"ell", ell},         {"n", n},
                       {"k", k},             {"starr", rep.starr},
                       {"correction", rep.correction}, {"prefactor_log", rep.prefactor_log},
                       {"estimate_log", rep.estimate_log}, {"alt_estimate_log", rep.alt_estimate_log},
                       {"exact_log", *rep.exact_log},
                       {"log_ratio", *rep.exact_log - rep.estimate_log}};
            } else {
                const EstimateReport rep = estimate(ell, n, k);
                out = {{"ell", ell},         {"n", n},
                       {"k", k},             {"starr", rep.starr},
                       {"correction", rep.correction}, {"prefactor_log", rep.prefactor_log},
                       {"estimate_log", rep.estimate_log}, {"alt_estimate_log", rep.alt_estimate_log}};
            }
            std::cout << out.dump() << "\n";
        } else if (cmd_validate->parsed()) {
            const CauchyResult r = cauchy_integral(ell, n, k, grid, 8, threads);
            const SaddleSolution sol = solve(ell, n, k);
            const CountTable table = count_table(ell, n);
            const double lhs_log = log_prefactor(sol) + std::log(r.value);
            const double rhs_log = exact_log_ratio(table, n, k) - std::log(static_cast<double>(n));
            const double residual = std::abs(std::expm1(lhs_log - rhs_log));
            std::cout << json{{"integral", r.value},
                              {"grid_used", r.grid_used},
                              {"converged", r.converged},
                              {"identity_residual", residual}}
                             .dump()
                      << "\n";
        } else if (cmd_logc->parsed()) {
            const CountTable table = count_table(ell, n);
            json out = {{"ell", ell}, {"n", n}};
            if (k_single >= 0) {
                out["k"] = k_single;
                out["strict"] = strictly_log_concave_at(table, n, k_single);
                out["upsilon"] = upsilon(table, n, k_single);
            } else {
                const ConcavityReport rep = scan(table, n);
                out["checked_k"] = rep.checked_k;
                out["violations"] = rep.violations;
                json ups = json::array();
                for (const auto& [kk, val] : rep.upsilon) ups.push_back({{"k", kk}, {"upsilon", val}});
                out["upsilon"] = ups;
            }
            std::cout << out.dump() << "\n";
        }
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
