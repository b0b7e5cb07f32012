#include "warmcut/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace warmcut {

void adam_step(AdamState& st, const std::vector<double>& grad, std::vector<double>& params) {
    const std::size_t dim = params.size();
    if (grad.size() != dim || st.m.size() != dim || st.v.size() != dim)
        throw std::invalid_argument("adam_step: gradient, parameter and state lengths must agree.");

    st.t += 1;
    const double lr_t =
        st.lr0 * std::sqrt(1.0 - std::pow(st.b2, st.t)) / (1.0 - std::pow(st.b1, st.t));
    for (std::size_t i = 0; i < dim; ++i) {
        st.m[i] = st.b1 * st.m[i] + (1.0 - st.b1) * grad[i];
        st.v[i] = st.b2 * st.v[i] + (1.0 - st.b2) * grad[i] * grad[i];
        params[i] -= lr_t * st.m[i] / (std::sqrt(st.v[i]) + st.eps);
    }
}

std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x, double step) {
    if (step <= 0.0) throw std::invalid_argument("fd_gradient: step must be positive.");
    std::vector<double> grad(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        x[i] = xi + step;
        const double fp = f(x);
        x[i] = xi - step;
        const double fm = f(x);
        x[i] = xi;
        grad[i] = (fp - fm) / (2.0 * step);
    }
    return grad;
}

}  // namespace warmcut
