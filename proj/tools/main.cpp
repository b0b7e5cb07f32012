#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "warmcut/bm.hpp"
#include "warmcut/engine.hpp"
#include "warmcut/exact.hpp"
#include "warmcut/graph.hpp"
#include "warmcut/optim.hpp"
#include "warmcut/sdp.hpp"
#include "warmcut/seeds.hpp"
#include "warmcut/train.hpp"
#include "warmcut/variant.hpp"
#include "warmcut/verify.hpp"

using namespace warmcut;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kGenerator = "configuration-model";
constexpr double kFavoredGamma = 5.7665;
constexpr double kFavoredBeta = 4.4898;
constexpr int kExactCap = 26;

/*
 * Seed discipline: one master seed fans out to a per-instance graph seed and
 * a per-instance solver seed, keyed by (n, index). Every command that touches
 * instance (n, i) derives the same pair, so the compare and sweep tables are
 * consistent row by row and any single instance can be re-run in isolation.
 */
std::uint64_t instance_key(int n, int index) {
    return static_cast<std::uint64_t>(n) * 1000000ull + static_cast<std::uint64_t>(index);
}

Graph instance_graph(std::uint64_t master, int n, int index) {
    return generate_u3r(n, split_seed(master, stream::graph_gen, instance_key(n, index)));
}

std::uint64_t instance_seed(std::uint64_t master, int n, int index) {
    return split_seed(master, stream::instance, instance_key(n, index));
}

void parallel_map(int jobs, int count, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int pool = std::min(jobs, count);
    workers.reserve(pool);
    for (int w = 0; w < pool; ++w)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : workers) t.join();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

struct Stat {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

Stat stat_of(const std::vector<double>& xs) {
    Stat s;
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return s;
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stderr_mean = std::sqrt(ss / (static_cast<double>(xs.size()) - 1.0) /
                              static_cast<double>(xs.size()));
    return s;
}

/* <Z> sign readout: +1 side is |0>; exact zeros keep the warm bit. */
Assignment z_readout(const std::vector<double>& z, const Assignment& warm_bits) {
    Assignment bits(z.size());
    for (std::size_t j = 0; j < z.size(); ++j)
        bits[j] = z[j] > 0.0 ? 0 : (z[j] < 0.0 ? 1 : warm_bits[j]);
    return bits;
}

std::vector<std::pair<double, double>> random_inits(std::uint64_t seed, int count,
                                                    bool favored_first) {
    std::vector<std::pair<double, double>> inits;
    inits.reserve(count);
    if (favored_first && count > 0) inits.emplace_back(kFavoredGamma, kFavoredBeta);
    for (int i = static_cast<int>(inits.size()); i < count; ++i) {
        std::mt19937_64 rng(split_seed(seed, stream::angle_init, i));
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        const double g = angle(rng);
        const double b = angle(rng);
        inits.emplace_back(g, b);
    }
    return inits;
}

struct AlgoOutcome {
    /* Rounding algorithms report the cut of a realized assignment (integer).
       Variational states report the expected measured cut, which is -energy
       and generally fractional; the sign-readout cut stays in params. */
    double cut = 0.0;
    bool fractional = false;
    std::optional<double> energy;
    json params;
};

struct AlgoFlags {
    int projections = 1;
    int restarts = 10;
    double epsilon = 0.25;
    double tol = 1e-7;
};

AlgoOutcome run_algo(const Graph& g, const std::string& algo, std::uint64_t seed,
                     const AlgoFlags& flags) {
    AlgoOutcome out;
    out.params["seed"] = seed;
    if (algo == "exact") {
        const ExactCut ex = maxcut_bruteforce(g, kExactCap);
        out.cut = ex.value;
        out.params["method"] = "gray-code-enumeration";
        return out;
    }
    if (algo == "gw") {
        const GwResult gw = gw_solve(g, flags.projections, seed);
        out.cut = gw.cut;
        out.params["projections"] = flags.projections;
        out.params["sdp_objective"] = gw.sdp_objective;
        return out;
    }
    if (algo == "bm") {
        const AngleSolution sol = solve_bm_mc2(g, flags.restarts, seed);
        const Assignment bits = project_angles(sol, split_seed(seed, stream::bm_rotation, 0));
        out.cut = cut_value(g, bits);
        out.params["restarts"] = flags.restarts;
        out.params["relaxed_value"] = sol.value;
        return out;
    }
    if (algo == "qaoa-std") {
        const VariantConfig cfg = encode_standard(g.n());
        const AngleResult r = train_angles(g, cfg, random_inits(seed, 10, false));
        out.cut = -r.energy;
        out.fractional = true;
        out.energy = r.energy;
        out.params["readout_cut"] =
            cut_value(g, z_readout(expected_z(g, cfg, r.gamma1, r.beta1), cfg.warm_bits));
        out.params["inits"] = 10;
        out.params["gamma1"] = r.gamma1;
        out.params["beta1"] = r.beta1;
        return out;
    }
    if (algo == "qaoa-ws") {
        const GwResult gw = gw_solve(g, 1, seed);
        std::vector<double> c(g.n());
        for (int v = 0; v < g.n(); ++v) c[v] = gw.best[v] ? 1.0 : 0.0;
        const VariantConfig cfg = encode_ws_qaoa(c, flags.epsilon);
        const AngleResult r = train_angles(g, cfg, random_inits(seed, 10, true));
        out.cut = -r.energy;
        out.fractional = true;
        out.energy = r.energy;
        out.params["readout_cut"] =
            cut_value(g, z_readout(expected_z(g, cfg, r.gamma1, r.beta1), cfg.warm_bits));
        out.params["epsilon"] = flags.epsilon;
        out.params["warm_source"] = "gw-single-projection";
        out.params["warm_cut"] = gw.cut;
        out.params["inits"] = 10;
        out.params["favored_init"] = {kFavoredGamma, kFavoredBeta};
        out.params["gamma1"] = r.gamma1;
        out.params["beta1"] = r.beta1;
        return out;
    }
    if (algo == "qaoa-warmest") {
        const AngleSolution sol = solve_bm_mc2(g, flags.restarts, seed);
        const int top = static_cast<int>(split_seed(seed, stream::bm_rotation, 1) %
                                         static_cast<std::uint64_t>(g.n()));
        const AngleSolution rotated = vertex_at_top(sol, top);
        const VariantConfig cfg = encode_warmest(rotated.theta);
        const AngleResult r = train_angles(g, cfg, random_inits(seed, 10, false));
        out.cut = -r.energy;
        out.fractional = true;
        out.energy = r.energy;
        out.params["readout_cut"] =
            cut_value(g, z_readout(expected_z(g, cfg, r.gamma1, r.beta1), cfg.warm_bits));
        out.params["warm_source"] = "bm-best-of-restarts";
        out.params["restarts"] = flags.restarts;
        out.params["rotation"] = "vertex-at-top";
        out.params["top_vertex"] = top;
        out.params["relaxed_value"] = sol.value;
        out.params["inits"] = 10;
        out.params["gamma1"] = r.gamma1;
        out.params["beta1"] = r.beta1;
        return out;
    }
    if (algo == "qaoa-wsab") {
        const GwResult gw = gw_solve(g, 1, seed);
        const TrainReport rep = train_ws_ab(g, gw.best);
        out.cut = rep.best_cut;
        out.energy = rep.energy_trace.back();
        out.params["warm_source"] = "gw-single-projection";
        out.params["warm_cut"] = gw.cut;
        out.params["update_schedule"] = "joint-every-iteration";
        out.params["iterations"] = rep.iterations;
        out.params["converged"] = rep.converged;
        out.params["gamma1"] = rep.gamma1;
        out.params["beta1"] = rep.beta1;
        return out;
    }
    throw std::invalid_argument("unknown algorithm '" + algo + "'.");
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing.");
    out << body;
    if (!out) throw std::runtime_error("write to '" + path + "' failed.");
}

json base_manifest(const std::string& command, std::uint64_t seed) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["seed"] = seed;
    return m;
}

int cmd_generate(int n, int count, std::uint64_t seed, const std::string& out_dir) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("generate: n must be even and at least 4.");
    if (count < 1) throw std::invalid_argument("generate: count must be positive.");
    std::filesystem::create_directories(out_dir);
    json manifest = base_manifest("generate", seed);
    manifest["n"] = n;
    manifest["count"] = count;
    manifest["generator"] = kGenerator;
    json files = json::array();
    for (int i = 0; i < count; ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "u3r_n%d_%03d.txt", n, i);
        const std::string path = (std::filesystem::path(out_dir) / name).string();
        write_edge_list_file(path, instance_graph(seed, n, i));
        files.push_back(name);
    }
    manifest["files"] = files;
    write_text_file((std::filesystem::path(out_dir) / "manifest.json").string(),
                    manifest.dump(2) + "\n");
    std::cout << "wrote " << count << " graphs and manifest.json to " << out_dir << "\n";
    return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& algo, std::uint64_t seed,
              const AlgoFlags& flags, const std::string& out_path) {
    const Graph g = read_edge_list_file(graph_path);
    const auto t0 = std::chrono::steady_clock::now();
    const AlgoOutcome r = run_algo(g, algo, seed, flags);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

    json rec;
    rec["algo"] = algo;
    rec["graph"] = graph_path;
    rec["n"] = g.n();
    rec["m"] = g.m();
    if (r.fractional)
        rec["cut"] = r.cut;
    else
        rec["cut"] = static_cast<long long>(std::llround(r.cut));
    if (r.energy) rec["energy"] = *r.energy;
    if (g.n() <= kExactCap) {
        const int exact = algo == "exact" ? static_cast<int>(std::llround(r.cut))
                                          : maxcut_bruteforce(g, kExactCap).value;
        rec["exact"] = exact;
        rec["ratio"] = r.cut / exact;
    }
    rec["wall_time_s"] = dt.count();
    rec["seed"] = seed;
    rec["version"] = kVersion;
    rec["params"] = r.params;

    const std::string body = rec.dump(2) + "\n";
    std::cout << body;
    if (!out_path.empty()) write_text_file(out_path, body);
    return 0;
}

int cmd_compare(const std::vector<int>& n_list, int graphs, std::vector<std::string> algos,
                std::uint64_t seed, const std::string& out_path, int jobs) {
    if (algos.empty()) throw std::invalid_argument("compare: algorithm list is empty.");
    if (graphs < 1) throw std::invalid_argument("compare: graphs per n must be positive.");
    if (n_list.empty()) throw std::invalid_argument("compare: n list is empty.");

    struct Cell {
        double cut = 0.0;
        std::optional<double> ratio;
        int m = 0;
    };
    const int per_n = graphs;
    const int tasks = static_cast<int>(n_list.size()) * per_n;
    std::vector<std::vector<Cell>> cells(tasks, std::vector<Cell>(algos.size()));
    AlgoFlags flags;

    parallel_map(jobs, tasks, [&](int task) {
        const int n = n_list[task / per_n];
        const int index = task % per_n;
        const Graph g = instance_graph(seed, n, index);
        const std::uint64_t s = instance_seed(seed, n, index);
        std::optional<int> exact;
        if (n <= kExactCap) exact = maxcut_bruteforce(g, kExactCap).value;
        for (std::size_t a = 0; a < algos.size(); ++a) {
            const AlgoOutcome r = run_algo(g, algos[a], s, flags);
            Cell& cell = cells[task][a];
            cell.cut = r.cut;
            cell.m = g.m();
            if (exact) cell.ratio = r.cut / *exact;
        }
    });

    std::string csv =
        "n,algo,graphs,mean_cut,stderr_cut,mean_cut_per_edge,stderr_cut_per_edge,"
        "mean_ratio,stderr_ratio\n";
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        for (std::size_t a = 0; a < algos.size(); ++a) {
            std::vector<double> cuts, per_edge, ratios;
            for (int i = 0; i < per_n; ++i) {
                const Cell& cell = cells[ni * per_n + i][a];
                cuts.push_back(cell.cut);
                per_edge.push_back(static_cast<double>(cell.cut) / cell.m);
                if (cell.ratio) ratios.push_back(*cell.ratio);
            }
            const Stat sc = stat_of(cuts);
            const Stat se = stat_of(per_edge);
            csv += std::to_string(n_list[ni]) + "," + algos[a] + "," +
                   std::to_string(per_n) + "," + fmt(sc.mean) + "," + fmt(sc.stderr_mean) +
                   "," + fmt(se.mean) + "," + fmt(se.stderr_mean) + ",";
            if (!ratios.empty()) {
                const Stat sr = stat_of(ratios);
                csv += fmt(sr.mean) + "," + fmt(sr.stderr_mean);
            } else {
                csv += ",";
            }
            csv += "\n";
        }
    }
    write_text_file(out_path, csv);

    json manifest = base_manifest("compare", seed);
    manifest["n"] = n_list;
    manifest["graphs"] = graphs;
    manifest["algos"] = algos;
    manifest["jobs"] = jobs;
    manifest["update_schedule"] = "joint-every-iteration";
    manifest["generator"] = kGenerator;
    write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << out_path << " (" << tasks << " instances x " << algos.size()
              << " algorithms)\n";
    return 0;
}

int cmd_projection_sweep(const std::vector<int>& n_list, const std::vector<int>& r_list,
                         int graphs, int cap, std::uint64_t seed,
                         const std::string& out_path, int jobs) {
    if (n_list.empty()) throw std::invalid_argument("projection-sweep: n list is empty.");
    if (r_list.empty()) throw std::invalid_argument("projection-sweep: R list is empty.");
    for (int r : r_list)
        if (r < 1) throw std::invalid_argument("projection-sweep: R values must be positive.");
    if (graphs < 1) throw std::invalid_argument("projection-sweep: graphs must be positive.");
    if (cap < 1) throw std::invalid_argument("projection-sweep: cap must be positive.");

    struct InstanceRow {
        std::vector<double> gw_per_edge;    // one per R
        std::vector<double> wsab_per_edge;  // one per R
        int match = 0;
    };
    const int per_n = graphs;
    const int tasks = static_cast<int>(n_list.size()) * per_n;
    std::vector<InstanceRow> rows(tasks);

    parallel_map(jobs, tasks, [&](int task) {
        const int n = n_list[task / per_n];
        const int index = task % per_n;
        const Graph g = instance_graph(seed, n, index);
        const std::uint64_t s = instance_seed(seed, n, index);
        InstanceRow& row = rows[task];
        const double m = g.m();
        std::optional<int> single_target;
        for (std::size_t ri = 0; ri < r_list.size(); ++ri) {
            const GwResult gw = gw_solve(g, r_list[ri], s);
            const TrainReport rep = train_ws_ab(g, gw.best);
            row.gw_per_edge.push_back(gw.cut / m);
            row.wsab_per_edge.push_back(rep.best_cut / m);
            if (r_list[ri] == 1 && !single_target) single_target = rep.best_cut;
        }
        if (!single_target) {
            const GwResult gw = gw_solve(g, 1, s);
            single_target = train_ws_ab(g, gw.best).best_cut;
        }
        row.match = projections_to_match(g, *single_target, cap, s);
    });

    std::string csv =
        "kind,n,R,graphs,gw_mean_cut_per_edge,gw_stderr_cut_per_edge,"
        "wsab_mean_cut_per_edge,wsab_stderr_cut_per_edge,match_median,match_mean,"
        "match_capped\n";
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        for (std::size_t ri = 0; ri < r_list.size(); ++ri) {
            std::vector<double> gw_vals, ab_vals;
            for (int i = 0; i < per_n; ++i) {
                gw_vals.push_back(rows[ni * per_n + i].gw_per_edge[ri]);
                ab_vals.push_back(rows[ni * per_n + i].wsab_per_edge[ri]);
            }
            const Stat sg = stat_of(gw_vals);
            const Stat sa = stat_of(ab_vals);
            csv += "sweep," + std::to_string(n_list[ni]) + "," +
                   std::to_string(r_list[ri]) + "," + std::to_string(per_n) + "," +
                   fmt(sg.mean) + "," + fmt(sg.stderr_mean) + "," + fmt(sa.mean) + "," +
                   fmt(sa.stderr_mean) + ",,,\n";
        }
        std::vector<double> matches;
        int capped = 0;
        for (int i = 0; i < per_n; ++i) {
            matches.push_back(rows[ni * per_n + i].match);
            if (rows[ni * per_n + i].match >= cap) ++capped;
        }
        std::sort(matches.begin(), matches.end());
        const std::size_t k = matches.size();
        const double median =
            k % 2 == 1 ? matches[k / 2] : 0.5 * (matches[k / 2 - 1] + matches[k / 2]);
        const Stat sm = stat_of(matches);
        csv += "match," + std::to_string(n_list[ni]) + ",," + std::to_string(per_n) +
               ",,,,," + fmt(median) + "," + fmt(sm.mean) + "," + std::to_string(capped) +
               "\n";
    }
    write_text_file(out_path, csv);

    json manifest = base_manifest("projection-sweep", seed);
    manifest["n"] = n_list;
    manifest["R"] = r_list;
    manifest["graphs"] = graphs;
    manifest["cap"] = cap;
    manifest["jobs"] = jobs;
    manifest["update_schedule"] = "joint-every-iteration";
    manifest["generator"] = kGenerator;
    write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << out_path << " (" << tasks << " instances, " << r_list.size()
              << " R values)\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
    const VerifyReport report = run_verify_suite(suite, seed);
    json rec;
    rec["suite"] = report.suite;
    rec["seed"] = report.seed;
    rec["version"] = kVersion;
    rec["passed"] = report.passed();
    rec["checks"] = json::array();
    for (const CheckResult& c : report.checks) {
        json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["detail"] = c.detail;
        rec["checks"].push_back(entry);
    }
    const std::string body = rec.dump(2) + "\n";
    std::cout << body;
    if (!out_path.empty()) write_text_file(out_path, body);
    return report.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MaxCut warm-start QAOA toolbox: generate, solve, compare, sweep, verify"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    const auto add_seed = [&seed](CLI::App* sub) {
        sub->add_option("--seed", seed, "Master seed (default 0)")->capture_default_str();
    };

    auto* gen = app.add_subcommand("generate", "Write random 3-regular edge-list files");
    add_seed(gen);
    int gen_n = 0, gen_count = 1;
    std::string gen_out = "graphs";
    gen->add_option("--n", gen_n, "Vertex count (even, >= 4)")->required();
    gen->add_option("--count", gen_count, "Number of graphs")->capture_default_str();
    gen->add_option("--out", gen_out, "Output directory")->capture_default_str();

    auto* solve = app.add_subcommand("solve", "Solve one graph file with one algorithm");
    add_seed(solve);
    std::string solve_graph, solve_algo, solve_out;
    AlgoFlags flags;
    solve->add_option("graph", solve_graph, "Edge-list file")->required();
    solve->add_option("--algo", solve_algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"exact", "gw", "bm", "qaoa-std", "qaoa-ws", "qaoa-warmest",
                               "qaoa-wsab"}));
    solve->add_option("--projections", flags.projections, "GW projections (gw only)")
        ->capture_default_str();
    solve->add_option("--restarts", flags.restarts, "BM restarts (bm, qaoa-warmest)")
        ->capture_default_str();
    solve->add_option("--epsilon", flags.epsilon, "Regularization (qaoa-ws)")
        ->capture_default_str();
    solve->add_option("--tol", flags.tol, "Numerical tolerance")->capture_default_str();
    solve->add_option("--out", solve_out, "Also write the JSON record here");

    auto* cmp = app.add_subcommand("compare", "Mean cut/ratio table over random instances");
    add_seed(cmp);
    std::vector<int> cmp_n;
    std::vector<std::string> cmp_algos;
    int cmp_graphs = 10, cmp_jobs = 1;
    std::string cmp_out = "compare.csv";
    cmp->add_option("--n", cmp_n, "Vertex counts")->required()->delimiter(',');
    cmp->add_option("--graphs", cmp_graphs, "Graphs per n")->capture_default_str();
    cmp->add_option("--algos", cmp_algos, "Algorithms")->required()->delimiter(',');
    cmp->add_option("--jobs", cmp_jobs, "Parallel instances")->capture_default_str();
    cmp->add_option("--out", cmp_out, "Output CSV")->capture_default_str();

    auto* sweep = app.add_subcommand(
        "projection-sweep", "Best-of-R GW vs retrained warm starts, plus match counts");
    add_seed(sweep);
    std::vector<int> sweep_n, sweep_r;
    int sweep_graphs = 10, sweep_cap = 10000, sweep_jobs = 1;
    std::string sweep_out = "sweep.csv";
    sweep->add_option("--n", sweep_n, "Vertex counts")->required()->delimiter(',');
    sweep->add_option("--R", sweep_r, "Projection counts")->required()->delimiter(',');
    sweep->add_option("--graphs", sweep_graphs, "Graphs per n")->capture_default_str();
    sweep->add_option("--cap", sweep_cap, "Match-count cap")->capture_default_str();
    sweep->add_option("--jobs", sweep_jobs, "Parallel instances")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output CSV")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a self-check suite");
    add_seed(verify);
    std::string verify_suite, verify_out;
    verify->add_option("--suite", verify_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"oracle", "closedform", "guarantees"}));
    verify->add_option("--out", verify_out, "Also write the JSON report here");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_generate(gen_n, gen_count, seed, gen_out);
        if (solve->parsed()) return cmd_solve(solve_graph, solve_algo, seed, flags, solve_out);
        if (cmp->parsed())
            return cmd_compare(cmp_n, cmp_graphs, cmp_algos, seed, cmp_out, cmp_jobs);
        if (sweep->parsed())
            return cmd_projection_sweep(sweep_n, sweep_r, sweep_graphs, sweep_cap, seed,
                                        sweep_out, sweep_jobs);
        if (verify->parsed()) return cmd_verify(verify_suite, seed, verify_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
