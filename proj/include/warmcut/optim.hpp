#ifndef WARMCUT_OPTIM_HPP
#define WARMCUT_OPTIM_HPP

#include <functional>
#include <vector>

namespace warmcut {

/*
 * Adaptive-moment (Adam) state for first-order parameter updates.
 * m and v are the biased first and second moment estimates; t counts
 * completed steps and drives the bias-corrected learning rate
 * lr_t = lr0 * sqrt(1 - b2^t) / (1 - b1^t).
 */
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    int t = 0;
    double lr0 = 0.001;
    double b1 = 0.9;
    double b2 = 0.999;
    double eps = 1e-8;

    AdamState(std::size_t dim, double lr0_in) : m(dim, 0.0), v(dim, 0.0), lr0(lr0_in) {}
};

/*
 * One in-place Adam update: params -= lr_t * m / (sqrt(v) + eps).
 * Minimizes the objective whose gradient is grad; pass the negated
 * gradient to ascend. Throws std::invalid_argument on length mismatch.
 */
void adam_step(AdamState& st, const std::vector<double>& grad, std::vector<double>& params);

/* Central-difference gradient (f(x+s e_i) - f(x-s e_i)) / (2s). */
std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x, double step = 1e-5);

}  // namespace warmcut

#endif
