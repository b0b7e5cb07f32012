#include "warmcut/variant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace warmcut {

namespace {
constexpr double half_pi = std::numbers::pi / 2.0;

double alpha0(std::uint8_t bit) { return bit ? -half_pi : half_pi; }
}  // namespace

VariantConfig encode_ws_ab(const Assignment& warm_bits, const std::vector<double>& h) {
    if (warm_bits.size() != h.size())
        throw std::invalid_argument("encode_ws_ab: warm_bits and h length mismatch.");
    VariantConfig cfg;
    cfg.variant = Variant::ws_ab;
    cfg.warm_bits = warm_bits;
    cfg.h = h;
    const std::size_t n = h.size();
    cfg.alpha.resize(n);
    cfg.delta.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        cfg.alpha[j] = std::atan(h[j]);
        cfg.delta[j] = cfg.alpha[j] - alpha0(warm_bits[j]);
    }
    return cfg;
}

VariantConfig encode_ws_qaoa(const std::vector<double>& c, double eps) {
    if (eps < 0.0 || eps > 0.5)
        throw std::invalid_argument("encode_ws_qaoa: eps must lie in [0, 0.5].");
    VariantConfig cfg;
    cfg.variant = Variant::ws_qaoa;
    cfg.epsilon = eps;
    const std::size_t n = c.size();
    cfg.warm_bits.resize(n);
    cfg.alpha.resize(n);
    cfg.delta.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (c[j] < 0.0 || c[j] > 1.0)
            throw std::invalid_argument("encode_ws_qaoa: c values must lie in [0, 1].");
        cfg.warm_bits[j] = c[j] >= 0.5 ? 1 : 0;
        double clamped = std::clamp(c[j], eps, 1.0 - eps);
        double theta = 2.0 * std::asin(std::sqrt(clamped)) - half_pi;
        cfg.alpha[j] = std::numbers::pi - theta;
        cfg.delta[j] = std::numbers::pi - cfg.alpha[j] - alpha0(cfg.warm_bits[j]);
    }
    return cfg;
}

VariantConfig encode_warmest(const std::vector<double>& theta) {
    VariantConfig cfg;
    cfg.variant = Variant::warmest;
    const std::size_t n = theta.size();
    cfg.warm_bits.assign(n, 0);
    cfg.alpha.resize(n);
    cfg.delta = theta;
    for (std::size_t j = 0; j < n; ++j) cfg.alpha[j] = theta[j] + half_pi;
    return cfg;
}

VariantConfig encode_standard(int n) {
    if (n <= 0) throw std::invalid_argument("encode_standard: n must be positive.");
    VariantConfig cfg;
    cfg.variant = Variant::standard;
    cfg.warm_bits.assign(static_cast<std::size_t>(n), 0);
    cfg.alpha.assign(static_cast<std::size_t>(n), 0.0);
    cfg.delta.assign(static_cast<std::size_t>(n), -half_pi);
    return cfg;
}

}  // namespace warmcut
