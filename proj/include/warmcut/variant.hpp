#ifndef WARMCUT_VARIANT_HPP
#define WARMCUT_VARIANT_HPP

#include <vector>

#include "warmcut/graph.hpp"

namespace warmcut {

enum class Variant { standard, ws_qaoa, ws_ab, warmest };

/*
 * Per-qubit encoding of a level-1 warm-started circuit
 *
 *   |psi_f> = Ry(alpha) exp(-i beta1 H_M) Ry(-alpha) exp(-i gamma1 H_C) Ry(delta) |psi_c>
 *
 * where |psi_c> is the computational basis state given by warm_bits, every
 * Ry(...) is the tensor product of per-qubit y-rotations, and H_M = sum_j X_j.
 * The four encoders below fix (alpha, delta, warm_bits) per variant; the
 * struct is an open aggregate so tests can build constrained configurations
 * directly (e.g. forcing delta = 0).
 */
struct VariantConfig {
    Variant variant = Variant::standard;
    Assignment warm_bits;        // |psi_c>
    std::vector<double> alpha;   // mixer-axis tilt per qubit
    std::vector<double> delta;   // pre-rotation of |psi_c> per qubit
    std::vector<double> h;       // bias fields (ws_ab only, empty otherwise)
    double epsilon = 0.0;        // regularization (ws_qaoa only)

    int n() const { return static_cast<int>(warm_bits.size()); }
};

// <Z_v> in |psi_c>: bit 0 -> +1, bit 1 -> -1. The only place this sign
// convention lives.
inline double warm_sign(std::uint8_t bit) { return bit ? -1.0 : 1.0; }

// alpha_j = arctan(h_j), delta_j = alpha_j - alpha0_j with alpha0 = +pi/2 for
// bit 0 and -pi/2 for bit 1.
VariantConfig encode_ws_ab(const Assignment& warm_bits, const std::vector<double>& h);

// theta_j = 2 arcsin(sqrt(clamp(c_j, eps, 1-eps))) - pi/2; alpha_j = pi - theta_j;
// delta_j = pi - alpha_j - alpha0_j; warm bit = round(c_j).
VariantConfig encode_ws_qaoa(const std::vector<double>& c, double eps);

// alpha_j = theta_j + pi/2, delta_j = theta_j, warm bits all zero.
VariantConfig encode_warmest(const std::vector<double>& theta);

// alpha = 0, delta = -pi/2, warm bits all zero.
VariantConfig encode_standard(int n);

}  // namespace warmcut

#endif  // WARMCUT_VARIANT_HPP
