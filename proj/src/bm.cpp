#include "warmcut/bm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "warmcut/optim.hpp"
#include "warmcut/seeds.hpp"

namespace warmcut {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    return t < 0.0 ? t + two_pi : t;
}

std::vector<double> ascent_gradient(const Graph& g, const std::vector<double>& theta) {
    std::vector<double> grad(theta.size(), 0.0);
    for (const auto& [j, k] : g.edges()) {
        const double s = 0.5 * std::sin(theta[j] - theta[k]);
        grad[j] += s;
        grad[k] -= s;
    }
    return grad;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/*
 * One ascent run. Adam proposals are safeguarded to keep F monotone: an
 * overshooting proposal is scaled back by halving, and if 40 halvings
 * never recover an increase the moments are reset and a backtracked plain
 * gradient step is taken instead.
 */
AngleSolution ascend(const Graph& g, std::vector<double> theta) {
    constexpr int max_iter = 5000;
    constexpr double grad_tol = 1e-6;

    AdamState adam(theta.size(), 0.05);
    double value = bm_objective(g, theta);

    for (int iter = 0; iter < max_iter; ++iter) {
        const std::vector<double> grad = ascent_gradient(g, theta);
        if (inf_norm(grad) <= grad_tol) break;

        std::vector<double> descent(grad.size());
        for (std::size_t i = 0; i < grad.size(); ++i) descent[i] = -grad[i];

        std::vector<double> proposal = theta;
        adam_step(adam, descent, proposal);

        bool accepted = false;
        double scale = 1.0;
        for (int halving = 0; halving <= 40; ++halving) {
            std::vector<double> candidate(theta.size());
            for (std::size_t i = 0; i < theta.size(); ++i)
                candidate[i] = theta[i] + scale * (proposal[i] - theta[i]);
            const double cand_value = bm_objective(g, candidate);
            if (cand_value >= value) {
                theta = std::move(candidate);
                value = cand_value;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (accepted) continue;

        std::fill(adam.m.begin(), adam.m.end(), 0.0);
        std::fill(adam.v.begin(), adam.v.end(), 0.0);
        double step = adam.lr0;
        bool recovered = false;
        for (int halving = 0; halving <= 40; ++halving) {
            std::vector<double> candidate(theta.size());
            for (std::size_t i = 0; i < theta.size(); ++i)
                candidate[i] = theta[i] + step * grad[i];
            const double cand_value = bm_objective(g, candidate);
            if (cand_value >= value) {
                theta = std::move(candidate);
                value = cand_value;
                recovered = true;
                break;
            }
            step *= 0.5;
        }
        // No float-representable increase along the gradient: local optimum.
        if (!recovered) break;
    }

    for (double& t : theta) t = wrap_angle(t);
    const double final_value = bm_objective(g, theta);
    return AngleSolution{std::move(theta), final_value};
}

}  // namespace

double bm_objective(const Graph& g, const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != g.n())
        throw std::invalid_argument("bm_objective: angle count must match the vertex count.");
    double acc = 0.0;
    for (const auto& [j, k] : g.edges()) acc += 0.5 * (1.0 - std::cos(theta[j] - theta[k]));
    return acc;
}

AngleSolution solve_bm_mc2(const Graph& g, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("solve_bm_mc2: need at least one restart.");

    AngleSolution best;
    best.value = -1.0;
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(split_seed(seed, stream::bm_restart, static_cast<std::uint64_t>(r)));
        std::uniform_real_distribution<double> uniform(0.0, two_pi);
        std::vector<double> theta(g.n());
        for (double& t : theta) t = uniform(rng);

        AngleSolution sol = ascend(g, std::move(theta));
        if (sol.value > best.value) best = std::move(sol);
    }
    return best;
}

AngleSolution vertex_at_top(const AngleSolution& sol, int index) {
    if (index < 0 || index >= static_cast<int>(sol.theta.size()))
        throw std::invalid_argument("vertex_at_top: index out of range.");
    AngleSolution out = sol;
    const double pivot = sol.theta[index];
    for (double& t : out.theta) t = wrap_angle(t - pivot);
    return out;
}

AngleSolution uniform_rotation(const AngleSolution& sol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double shift = std::uniform_real_distribution<double>(0.0, two_pi)(rng);
    AngleSolution out = sol;
    for (double& t : out.theta) t = wrap_angle(t + shift);
    return out;
}

Assignment project_angles(const AngleSolution& sol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double phi = std::uniform_real_distribution<double>(0.0, two_pi)(rng);
    Assignment bits(sol.theta.size());
    for (std::size_t j = 0; j < sol.theta.size(); ++j)
        bits[j] = std::cos(sol.theta[j] - phi) >= 0.0 ? 0 : 1;
    return bits;
}

}  // namespace warmcut
