#include "warmcut/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "warmcut/engine.hpp"

namespace warmcut {

namespace {

/*
 * Central differences at step 1e-5 cannot resolve gradients below the
 * round-off floor; treating such gradients as zero keeps the adaptive
 * moments from amplifying pure noise at stationary points.
 */
constexpr double fd_noise_floor = 1e-7;

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

constexpr double energy_window_tol = 1e-6;
constexpr int energy_window = 10;

bool energy_settled(const std::vector<double>& trace) {
    if (trace.size() < 2) return false;
    const std::size_t span = std::min<std::size_t>(trace.size(), energy_window);
    for (std::size_t i = trace.size() - span + 1; i < trace.size(); ++i)
        if (std::abs(trace[i] - trace[i - 1]) > energy_window_tol) return false;
    return true;
}

}  // namespace

std::vector<double> bias_gradient(const std::vector<double>& h, const std::vector<double>& z) {
    if (h.size() != z.size())
        throw std::invalid_argument("bias_gradient: field and expectation lengths must agree.");
    const double w = std::sqrt(3.0) / 3.0;
    std::vector<double> g(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) g[j] = h[j] + w * z[j];
    return g;
}

Assignment bias_state(const std::vector<double>& h, const Assignment& warm_bits) {
    if (h.size() != warm_bits.size())
        throw std::invalid_argument("bias_state: field and bit lengths must agree.");
    Assignment bits(h.size());
    for (std::size_t j = 0; j < h.size(); ++j)
        bits[j] = h[j] > 0.0 ? 1 : (h[j] < 0.0 ? 0 : warm_bits[j]);
    return bits;
}

TrainReport train_ws_ab(const Graph& g, const Assignment& warm_bits, const TrainOptions& opts) {
    if (static_cast<int>(warm_bits.size()) != g.n())
        throw std::invalid_argument("train_ws_ab: warm bit count must match the graph.");
    if (!g.is_cubic()) throw std::invalid_argument("train_ws_ab: graph must be 3-regular.");

    const int n = g.n();
    const double w = std::sqrt(3.0) / 3.0;
    std::vector<double> h(n);
    for (int j = 0; j < n; ++j) h[j] = warm_bits[j] ? w : -w;

    double gamma1 = opts.gamma1;
    double beta1 = opts.beta1;
    AdamState angle_adam(2, opts.lr_angles);
    AdamState h_adam(static_cast<std::size_t>(n), opts.lr_h);

    TrainReport rep;
    rep.bias_assignment = warm_bits;
    rep.best_cut = cut_value(g, warm_bits);

    int rounds = 0;
    for (; rounds < opts.max_iter; ++rounds) {
        const VariantConfig cfg = encode_ws_ab(warm_bits, h);
        rep.energy_trace.push_back(expected_cost(g, cfg, gamma1, beta1));
        const std::vector<double> z = expected_z(g, cfg, gamma1, beta1);
        const std::vector<double> gh = bias_gradient(h, z);

        if (inf_norm(gh) <= opts.tol && energy_settled(rep.energy_trace)) {
            rep.converged = true;
            break;
        }

        std::vector<double> angles{gamma1, beta1};
        const std::vector<double> agrad = fd_gradient(
            [&](const std::vector<double>& ab) { return expected_cost(g, cfg, ab[0], ab[1]); },
            angles, opts.fd_step);
        if (inf_norm(agrad) > fd_noise_floor) {
            adam_step(angle_adam, agrad, angles);
            gamma1 = angles[0];
            beta1 = angles[1];
        }

        adam_step(h_adam, gh, h);

        const Assignment bits = bias_state(h, warm_bits);
        const int c = cut_value(g, bits);
        if (c > rep.best_cut) {
            rep.best_cut = c;
            rep.bias_assignment = bits;
        }
    }

    if (!rep.converged) {
        const VariantConfig cfg = encode_ws_ab(warm_bits, h);
        rep.energy_trace.push_back(expected_cost(g, cfg, gamma1, beta1));
    }

    rep.gamma1 = gamma1;
    rep.beta1 = beta1;
    rep.h = std::move(h);
    rep.iterations = rounds;
    return rep;
}

AngleResult train_angles(const Graph& g, const VariantConfig& cfg,
                         const std::vector<std::pair<double, double>>& inits,
                         const TrainOptions& opts) {
    if (inits.empty()) throw std::invalid_argument("train_angles: need at least one init.");

    AngleResult best;
    best.energy = std::numeric_limits<double>::infinity();
    for (const auto& [g0, b0] : inits) {
        std::vector<double> angles{g0, b0};
        AdamState adam(2, opts.lr_angles);

        AngleResult run{g0, b0, expected_cost(g, cfg, g0, b0)};
        for (int iter = 0; iter < opts.max_iter; ++iter) {
            const std::vector<double> grad = fd_gradient(
                [&](const std::vector<double>& ab) { return expected_cost(g, cfg, ab[0], ab[1]); },
                angles, opts.fd_step);
            if (inf_norm(grad) <= fd_noise_floor) break;
            adam_step(adam, grad, angles);
            const double energy = expected_cost(g, cfg, angles[0], angles[1]);
            if (energy < run.energy) run = AngleResult{angles[0], angles[1], energy};
        }
        if (run.energy < best.energy) best = run;
    }
    return best;
}

}  // namespace warmcut
