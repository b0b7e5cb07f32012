#include "warmcut/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "warmcut/bm.hpp"
#include "warmcut/engine.hpp"
#include "warmcut/exact.hpp"
#include "warmcut/graph.hpp"
#include "warmcut/sdp.hpp"
#include "warmcut/seeds.hpp"
#include "warmcut/train.hpp"
#include "warmcut/variant.hpp"

namespace warmcut {

namespace {

constexpr double pi = std::numbers::pi;

std::string margin(const char* label, double value) {
    std::ostringstream out;
    out << label << " " << value;
    return out.str();
}

VariantConfig draw_config(int n, int which, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (which % 4) {
        case 0:
            return encode_standard(n);
        case 1: {
            std::vector<double> c(n);
            for (auto& x : c) x = unit(rng);
            return encode_ws_qaoa(c, 0.5 * unit(rng));
        }
        case 2: {
            Assignment bits(n);
            std::vector<double> h(n);
            for (int v = 0; v < n; ++v) {
                bits[v] = unit(rng) < 0.5 ? 0 : 1;
                h[v] = 4.0 * unit(rng) - 2.0;
            }
            return encode_ws_ab(bits, h);
        }
        default: {
            std::vector<double> theta(n);
            for (auto& t : theta) t = 2.0 * pi * unit(rng);
            return encode_warmest(theta);
        }
    }
}

Assignment draw_bits(int n, std::mt19937_64& rng) {
    Assignment bits(n);
    for (auto& b : bits) b = rng() & 1u;
    return bits;
}

std::vector<double> recovery_fields(const Assignment& warm_bits) {
    const double w = std::sqrt(3.0) / 3.0;
    std::vector<double> h(warm_bits.size());
    for (std::size_t j = 0; j < warm_bits.size(); ++j) h[j] = warm_bits[j] ? w : -w;
    return h;
}

CheckResult check_engine_oracle(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 1));
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    double worst = 0.0;
    for (int n : {8, 10, 12}) {
        for (int draw = 0; draw < 20; ++draw) {
            const Graph g = generate_u3r(n, rng());
            const VariantConfig cfg = draw_config(n, draw, rng);
            const double gamma1 = angle(rng);
            const double beta1 = angle(rng);
            const Expectation ref = statevector_expectation(g, cfg, gamma1, beta1);
            worst = std::max(worst,
                             std::abs(expected_cost(g, cfg, gamma1, beta1) - ref.energy));
            const std::vector<double> z = expected_z(g, cfg, gamma1, beta1);
            for (int v = 0; v < n; ++v) worst = std::max(worst, std::abs(z[v] - ref.z[v]));
        }
    }
    return {"engine matches statevector on random draws", worst <= 1e-9,
            margin("worst abs deviation", worst)};
}

CheckResult check_local_oracle(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 2));
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    double worst = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
        const Graph g = generate_u3r(12, rng());
        const VariantConfig cfg = draw_config(12, draw, rng);
        const double gamma1 = angle(rng);
        const double beta1 = angle(rng);
        const Expectation full = statevector_expectation(g, cfg, gamma1, beta1);
        const Expectation local = local_subgraph_expectation(g, cfg, gamma1, beta1);
        worst = std::max(worst, std::abs(full.energy - local.energy));
        for (int v = 0; v < 12; ++v)
            worst = std::max(worst, std::abs(full.z[v] - local.z[v]));
    }
    return {"local-neighborhood oracle matches statevector", worst <= 1e-9,
            margin("worst abs deviation", worst)};
}

CheckResult check_mixer_constants() {
    const MixerCoeffs c = mixer_coeffs(pi / 6, pi / 2);
    double worst = std::abs(c.cz + 0.5);
    worst = std::max(worst, std::abs(c.cy));
    worst = std::max(worst, std::abs(c.cx + std::sqrt(3.0) / 2));
    const MixerCoeffs id = mixer_coeffs(0.7, 0.0);
    worst = std::max(worst, std::abs(id.cz - 1.0));
    worst = std::max(worst, std::abs(id.cy));
    worst = std::max(worst, std::abs(id.cx));
    return {"mixer coefficients match closed-form values", worst <= 1e-12,
            margin("worst abs deviation", worst)};
}

CheckResult check_recovery(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 3));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = generate_u3r(40, rng());
        const Assignment warm = draw_bits(40, rng);
        const VariantConfig cfg = encode_ws_ab(warm, recovery_fields(warm));
        const double energy = expected_cost(g, cfg, pi, pi / 2);
        worst = std::max(worst, std::abs(energy + cut_value(g, warm)));
    }
    return {"bias-matched recovery reproduces the warm cut", worst <= 1e-12,
            margin("worst |energy + cut|", worst)};
}

CheckResult check_regularized_recovery(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 4));
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = generate_u3r(20, rng());
        std::vector<double> c(20);
        for (auto& x : c) x = (rng() & 1u) ? 1.0 : 0.0;
        const VariantConfig cfg = encode_ws_qaoa(c, 0.25);
        const double energy = expected_cost(g, cfg, 0.0, pi / 2);
        worst = std::max(worst, std::abs(energy + cut_value(g, cfg.warm_bits)));
    }
    return {"regularized binary warm start recovers its cut", worst <= 1e-12,
            margin("worst |energy + cut|", worst)};
}

CheckResult check_detuning(std::uint64_t seed, DetuningMode mode) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw,
                                   mode == DetuningMode::recovery ? 5 : 6));
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const Graph g = generate_u3r(16, rng());
        const Assignment warm = draw_bits(16, rng);
        const int cut = cut_value(g, warm);
        VariantConfig cfg;
        double gamma1 = pi;
        if (mode == DetuningMode::recovery) {
            cfg = encode_ws_ab(warm, recovery_fields(warm));
        } else {
            cfg.warm_bits = warm;
            cfg.delta.assign(16, 0.0);
            cfg.alpha.resize(16);
            for (auto& a : cfg.alpha) a = (rng() & 1u) ? pi / 6 : -pi / 6;
            gamma1 = angle(rng);
        }
        for (int i = 0; i < 100; ++i) {
            const double t = pi * i / 99.0;
            const double beta1 = mode == DetuningMode::recovery ? pi / 2 + t : t;
            const double engine = expected_cost(g, cfg, gamma1, beta1);
            const double closed = warm_detuning_energy(g, cut, t, mode);
            worst = std::max(worst, std::abs(engine - closed));
        }
    }
    const char* name = mode == DetuningMode::recovery
                           ? "detuned recovery mixer follows the closed-form curve"
                           : "unrotated tilted family follows the closed-form curve";
    return {name, worst <= 1e-9, margin("worst abs deviation", worst)};
}

CheckResult check_gw_guarantee(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 7));
    double ratio_sum = 0.0;
    double worst_dominance = 0.0;
    int count = 0;
    for (int n : {10, 12, 14, 16}) {
        for (int rep = 0; rep < 3; ++rep) {
            const Graph g = generate_u3r(n, rng());
            const ExactCut ex = maxcut_bruteforce(g);
            const GwResult gw = gw_solve(g, 20, rng());
            ratio_sum += static_cast<double>(gw.cut) / ex.value;
            worst_dominance = std::min(worst_dominance, gw.sdp_objective - ex.value);
            ++count;
        }
    }
    const double mean_ratio = ratio_sum / count;
    const bool ok = mean_ratio >= 0.878 && worst_dominance >= -1e-5;
    std::ostringstream detail;
    detail << "mean ratio " << mean_ratio << ", min(objective - exact) " << worst_dominance;
    return {"best-of-20 rounding beats the 0.878 guarantee on average", ok, detail.str()};
}

CheckResult check_relaxation_order(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 8));
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = generate_u3r(14, rng());
        const SdpState sdp = solve_sdp(g);
        const AngleSolution bm = solve_bm_mc2(g, 5, rng());
        worst = std::max(worst, bm.value - sdp.objective);
    }
    return {"rank-2 relaxation never exceeds the full relaxation", worst <= 1e-5,
            margin("max(bm - sdp)", worst)};
}

CheckResult check_guarantee_curve() {
    double worst = 1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double t = pi * i / 10000.0;
        const double f = 0.5 * (1.0 - 0.5 * std::cos(t)) - 0.75 * t / pi;
        worst = std::min(worst, f);
    }
    return {"level-0 rounding guarantee curve is nonnegative", worst >= -1e-15,
            margin("min f(t)", worst)};
}

CheckResult check_pi_gamma(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 9));
    bool ok = true;
    std::string failing;
    for (int trial = 0; trial < 4; ++trial) {
        const Graph g = generate_u3r(10, rng());
        if (!check_pi_gamma_identity(g, rng())) {
            ok = false;
            failing = "odd-regular instance came out false";
        }
    }
    const Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    if (!check_pi_gamma_identity(matching, rng())) {
        ok = false;
        failing = "1-regular matching came out false";
    }
    const Graph square(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (check_pi_gamma_identity(square, rng())) {
        ok = false;
        failing = "4-cycle came out true";
    }
    return {"pi cost angle reduces to a parity flip exactly for odd degrees", ok,
            ok ? "all cases as predicted" : failing};
}

CheckResult check_training_guarantee(std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, stream::oracle_draw, 10));
    int worst_gain = 0;
    for (int trial = 0; trial < 4; ++trial) {
        const Graph g = generate_u3r(40, rng());
        const GwResult gw = gw_solve(g, 1, rng());
        const TrainReport rep = train_ws_ab(g, gw.best);
        worst_gain = std::min(worst_gain, rep.best_cut - gw.cut);
    }
    return {"trained bias state never falls below its warm start", worst_gain >= 0,
            margin("min(best - warm)", static_cast<double>(worst_gain))};
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed) {
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    if (suite == "oracle") {
        report.checks.push_back(check_engine_oracle(seed));
        report.checks.push_back(check_local_oracle(seed));
    } else if (suite == "closedform") {
        report.checks.push_back(check_mixer_constants());
        report.checks.push_back(check_recovery(seed));
        report.checks.push_back(check_regularized_recovery(seed));
        report.checks.push_back(check_detuning(seed, DetuningMode::recovery));
        report.checks.push_back(check_detuning(seed, DetuningMode::unrotated));
    } else if (suite == "guarantees") {
        report.checks.push_back(check_gw_guarantee(seed));
        report.checks.push_back(check_relaxation_order(seed));
        report.checks.push_back(check_guarantee_curve());
        report.checks.push_back(check_pi_gamma(seed));
        report.checks.push_back(check_training_guarantee(seed));
    } else {
        throw std::invalid_argument("run_verify_suite: unknown suite '" + suite + "'.");
    }
    return report;
}

}  // namespace warmcut
