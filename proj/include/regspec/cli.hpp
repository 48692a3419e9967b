#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regspec/experiments.hpp"

namespace regspec::cli {

inline int env_threads() {
    if (const char* s = std::getenv("REGSPEC_THREADS")) {
        try {
            return std::max(0, std::stoi(s));
        } catch (const std::exception&) {
            return 0;
        }
    }
    return 0;
}

inline RegularGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

// Flatten one level of a JSON object into CSV "key,value" rows; nested
// objects use dotted keys.  Arrays are skipped (they belong to JSON output).
inline void flatten_csv(const Json& j, const std::string& prefix,
                        std::vector<std::vector<std::string>>& rows) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten_csv(value, name, rows);
        } else if (value.is_array()) {
            continue;
        } else {
            rows.push_back({name, value.is_string() ? value.get<std::string>()
                                                    : value.dump()});
        }
    }
}

struct OutputOptions {
    std::string out;
    bool csv = false;
};

inline void emit(const Json& result, const OutputOptions& opt, const std::string& command,
                 const Json& params, std::uint64_t seed, double wall_seconds) {
    if (opt.out.empty()) {
        std::cout << dump_canonical(result);
        return;
    }
    const std::filesystem::path path(opt.out);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::map<std::string, std::string> digests;
    if (opt.csv) {
        std::vector<std::vector<std::string>> rows;
        flatten_csv(result, "", rows);
        digests[path.filename().string()] = write_csv(path, {"key", "value"}, rows);
    } else {
        digests[path.filename().string()] = write_artifact(path, result);
    }
    std::filesystem::path manifest_path = path;
    manifest_path += ".manifest.json";
    write_manifest(manifest_path, command, params, seed, wall_seconds, digests);
}

inline int run(int argc, char** argv) {
    CLI::App app{"simulation and verification toolkit for cycle statistics and "
                 "spectral fluctuations of random regular graphs"};
    app.require_subcommand(1);

    int n = 100, d = 3, r = 5, samples = 1000, threads = env_threads(), m = 16;
    std::uint64_t seed = 1;
    OutputOptions out;
    std::string graph_file, fname = "x2", basis = "gamma", structure = "cycle",
                mode = "fixed", direction = "forward", method = "auto";
    int k = 3, j_len = 3, f_shared = 1, l_path = 1, kmax = 3, count = 1, chains = 32;
    double constant = 1.0, beta = 0.3;
    std::uint64_t burn_in = 0, gap = 0;
    bool backward = false, no_divisor_check = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "PRNG seed");
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
        sub->add_option("--out", out.out, "output artifact path (default: stdout)");
        auto* json_flag = sub->add_flag("--json", "write canonical JSON artifacts (default)");
        sub->add_flag("--csv", out.csv, "write CSV projection instead of JSON")
            ->excludes(json_flag);
    };

    CLI::App* c_sample = app.add_subcommand("sample", "sample uniform regular graphs");
    c_sample->add_option("--n", n, "vertex count")->required();
    c_sample->add_option("--d", d, "degree");
    c_sample->add_option("--count", count, "number of graphs");
    add_common(c_sample);

    CLI::App* c_census = app.add_subcommand("census", "count short cycles in a graph");
    c_census->add_option("--graph", graph_file, "graph file")->required();
    c_census->add_option("--r", r, "maximum cycle length");
    add_common(c_census);

    CLI::App* c_prob = app.add_subcommand("prob", "estimate small-subgraph probabilities");
    c_prob->add_option("--structure", structure, "cycle | two-cycles | joined-cycles");
    c_prob->add_option("--k", k, "cycle length");
    c_prob->add_option("--j", j_len, "first cycle length (two-cycles/joined-cycles)");
    c_prob->add_option("--f", f_shared, "shared path edges (two-cycles)");
    c_prob->add_option("--l", l_path, "connecting path edges (joined-cycles)");
    c_prob->add_option("--n", n, "vertex count");
    c_prob->add_option("--d", d, "degree");
    c_prob->add_option("--samples", samples, "Monte Carlo samples");
    c_prob->add_option("--constant", constant, "bound constant");
    add_common(c_prob);

    CLI::App* c_switch = app.add_subcommand("switch", "count switchings at a cycle");
    c_switch->add_option("--graph", graph_file, "graph file")->required();
    c_switch->add_option("--k", k, "cycle length");
    c_switch->add_option("--r", r, "census cutoff for validity");
    c_switch->add_flag("--backward", backward, "count backward switchings");
    c_switch->add_option("--samples", samples, "Monte Carlo samples");
    add_common(c_switch);

    CLI::App* c_stein = app.add_subcommand("stein", "empirical exchangeable-pair certificate");
    c_stein->add_option("--n", n, "vertex count");
    c_stein->add_option("--d", d, "degree");
    c_stein->add_option("--r", r, "maximum cycle length");
    c_stein->add_option("--samples", samples, "graph samples");
    add_common(c_stein);

    CLI::App* c_cnbw = app.add_subcommand("cnbw", "closed non-backtracking walk counts");
    c_cnbw->add_option("--graph", graph_file, "graph file")->required();
    c_cnbw->add_option("--kmax", kmax, "maximum walk length");
    c_cnbw->add_flag("--no-divisor-check", no_divisor_check,
                     "skip the cycle-census divisor-sum comparison");
    add_common(c_cnbw);

    CLI::App* c_spectra = app.add_subcommand("spectra", "scaled spectrum and functionals");
    c_spectra->add_option("--graph", graph_file, "graph file")->required();
    c_spectra->add_option("--f", fname, "test function (exp, x2, x3, gammaK, phiK)");
    c_spectra->add_option("--basis", basis, "expansion basis: gamma | phi");
    c_spectra->add_option("--m", m, "expansion degree");
    c_spectra->add_option("--kmax", kmax, "trace-identity check depth");
    add_common(c_spectra);

    CLI::App* c_limit = app.add_subcommand("limit", "limit-law parameters and sampler");
    c_limit->add_option("--mode", mode, "fixed | growing");
    c_limit->add_option("--f", fname, "test function");
    c_limit->add_option("--n", n, "vertex count (growing mode)");
    c_limit->add_option("--d", d, "degree");
    c_limit->add_option("--m", m, "expansion degree");
    c_limit->add_option("--kmax", kmax, "truncation for fixed-d draws");
    c_limit->add_option("--count", count, "number of limit draws");
    c_limit->add_option("--beta", beta, "cutoff exponent for r_n");
    add_common(c_limit);

    CLI::App* c_vp = app.add_subcommand("verify-poisson",
                                        "test joint Poisson cycle-count approximation");
    c_vp->add_option("--n", n, "vertex count");
    c_vp->add_option("--d", d, "degree");
    c_vp->add_option("--r", r, "maximum cycle length");
    c_vp->add_option("--samples", samples, "graph samples");
    c_vp->add_option("--constant", constant, "bound constant");
    add_common(c_vp);

    CLI::App* c_vc = app.add_subcommand("verify-clt",
                                        "test normal limits of standardized walk counts");
    c_vc->add_option("--n", n, "vertex count");
    c_vc->add_option("--d", d, "degree");
    c_vc->add_option("--kmax", kmax, "maximum walk length");
    c_vc->add_option("--r", r, "census cutoff for the chain");
    c_vc->add_option("--samples", samples, "retained samples");
    c_vc->add_option("--method", method, "auto | pairing | chain");
    c_vc->add_option("--chains", chains, "independent chains");
    c_vc->add_option("--burn-in", burn_in, "burn-in steps (0 = auto)");
    c_vc->add_option("--gap", gap, "steps between retained samples (0 = auto)");
    add_common(c_vc);

    CLI::App* c_mg = app.add_subcommand("metagraph-check",
                                        "exhaustive switching-walk verification");
    c_mg->add_option("--n", n, "vertex count");
    c_mg->add_option("--d", d, "degree");
    c_mg->add_option("--r", r, "maximum cycle length");
    add_common(c_mg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Json result;
        Json params;
        std::string command;
        if (c_sample->parsed()) {
            command = "sample";
            const std::filesystem::path dir =
                out.out.empty() ? std::filesystem::path("samples")
                                : std::filesystem::path(out.out).parent_path() / "graphs";
            result = experiments::run_sample(n, d, count, seed, dir, threads);
            params = result["params"];
        } else if (c_census->parsed()) {
            command = "census";
            const RegularGraph g = load_graph(graph_file);
            result = experiments::run_census(g, r);
            params = {{"graph", graph_file}, {"r", r}};
        } else if (c_prob->parsed()) {
            command = "prob";
            SubgraphStructure h = structure == "two-cycles"
                                      ? two_cycles_structure(j_len, k, f_shared)
                                  : structure == "joined-cycles"
                                      ? joined_cycles_structure(j_len, k, l_path)
                                      : cycle_structure(k);
            result = experiments::run_prob(h, n, d, samples, seed, constant, threads);
            params = result["params"];
        } else if (c_switch->parsed()) {
            command = "switch";
            const RegularGraph g = load_graph(graph_file);
            Rng rng = Rng::stream(seed, 0);
            const Cycle alpha = Cycle::from_vertices(rng.distinct(k, g.n()));
            CountOptions copt;
            copt.samples = samples;
            copt.seed = seed;
            result = experiments::run_switch(g, alpha, r, !backward, copt);
            params = result["params"];
        } else if (c_stein->parsed()) {
            command = "stein";
            SteinOptions opt;
            opt.n = n;
            opt.d = d;
            opt.r = r;
            opt.samples = samples;
            opt.seed = seed;
            opt.threads = threads;
            result = experiments::run_stein(opt);
            params = result["params"];
        } else if (c_cnbw->parsed()) {
            command = "cnbw";
            const RegularGraph g = load_graph(graph_file);
            result = experiments::run_cnbw(g, kmax, !no_divisor_check, threads);
            params = {{"graph", graph_file}, {"kmax", kmax}};
        } else if (c_spectra->parsed()) {
            command = "spectra";
            const RegularGraph g = load_graph(graph_file);
            result = experiments::run_spectra(g, fname, basis, m, kmax, threads);
            params = {{"graph", graph_file}, {"f", fname}, {"basis", basis}, {"m", m}};
        } else if (c_limit->parsed()) {
            command = "limit";
            result = mode == "growing"
                         ? experiments::run_limit_growing(fname, n, d, m, beta)
                         : experiments::run_limit_fixed(fname, d, m, kmax, count, seed,
                                                        threads);
            params = result["params"];
        } else if (c_vp->parsed()) {
            command = "verify-poisson";
            result = experiments::run_verify_poisson(n, d, r, samples, seed, constant,
                                                     threads);
            params = result["params"];
        } else if (c_vc->parsed()) {
            command = "verify-clt";
            experiments::CltOptions opt;
            opt.n = n;
            opt.d = d;
            opt.kmax = kmax;
            opt.samples = samples;
            opt.seed = seed;
            opt.method = method;
            opt.r = c_vc->count("--r") > 0 ? r : 0;
            opt.chains = chains;
            opt.burn_in = burn_in;
            opt.gap = gap;
            opt.threads = threads;
            result = experiments::run_verify_clt(opt);
            params = result["params"];
        } else if (c_mg->parsed()) {
            command = "metagraph-check";
            result = experiments::run_metagraph_check(n, d, r);
            params = result["params"];
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        emit(result, out, command, params, seed, wall);
        return 0;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const RejectionStallError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace regspec::cli
