#ifndef WARMCUT_TRAIN_HPP
#define WARMCUT_TRAIN_HPP

#include <utility>
#include <vector>

#include "warmcut/graph.hpp"
#include "warmcut/optim.hpp"
#include "warmcut/variant.hpp"

namespace warmcut {

/* Bias-field gradient g_j = h_j + (sqrt(3)/3) z_j. */
std::vector<double> bias_gradient(const std::vector<double>& h, const std::vector<double>& z);

/* Sign readout of the bias fields: h > 0 -> bit 1, h < 0 -> bit 0, h == 0 -> warm bit. */
Assignment bias_state(const std::vector<double>& h, const Assignment& warm_bits);

struct TrainOptions {
    double gamma1 = 4.2315;  // initial cost angle
    double beta1 = 1.0002;   // initial mixer angle
    double lr_angles = 0.05;
    double lr_h = 0.4;
    double fd_step = 1e-5;
    int max_iter = 1000;
    double tol = 1e-3;  // infinity-norm threshold on the bias gradient
};

/*
 * Outcome of one bias-field training run. h holds the final fields;
 * bias_assignment is the best sign readout seen over the whole trajectory
 * (the warm start counts as the iteration-0 candidate), so
 * best_cut >= cut_value(warm_bits) by construction. energy_trace has one
 * entry per evaluation, iterations completed update rounds.
 */
struct TrainReport {
    double gamma1 = 0.0;
    double beta1 = 0.0;
    std::vector<double> h;
    Assignment bias_assignment;
    int best_cut = 0;
    std::vector<double> energy_trace;
    int iterations = 0;
    bool converged = false;
};

/*
 * Joint training for the adaptive-bias variant. Each round evaluates the
 * closed-form energy and <Z>, updates (gamma1, beta1) by Adam on
 * central-difference gradients with the fields frozen, then updates the
 * fields by Adam on the bias gradient using the pre-update <Z>. Fields
 * start on the recovery manifold (h = -sqrt(3)/3 for bit 0, + for bit 1).
 * Converged when the bias gradient infinity-norm reaches opts.tol and every
 * consecutive energy change over the trailing ten evaluations is at most
 * 1e-6. Angle updates are skipped while the central-difference gradient
 * sits at its noise floor, so exact stationary points stay put.
 */
TrainReport train_ws_ab(const Graph& g, const Assignment& warm_bits,
                        const TrainOptions& opts = {});

struct AngleResult {
    double gamma1 = 0.0;
    double beta1 = 0.0;
    double energy = 0.0;
};

/*
 * Multi-start (gamma1, beta1) training for a fixed configuration: Adam on
 * central-difference gradients from each init, keeping the best energy seen
 * per run and the lowest-energy run overall.
 */
AngleResult train_angles(const Graph& g, const VariantConfig& cfg,
                         const std::vector<std::pair<double, double>>& inits,
                         const TrainOptions& opts = {});

}  // namespace warmcut

#endif
