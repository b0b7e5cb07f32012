#ifndef WARMCUT_ENGINE_HPP
#define WARMCUT_ENGINE_HPP

#include <array>
#include <vector>

#include "warmcut/graph.hpp"
#include "warmcut/variant.hpp"

namespace warmcut {

/*
 * Closed-form level-1 expectations for 3-regular graphs.
 *
 * The circuit is R_y(alpha) exp(-i beta1 H_M) R_y(-alpha) exp(-i gamma1 H_C)
 * R_y(delta) |psi_c> with H_M = sum_j X_j and H_C = sum_(j,k) (Z_j Z_k - 1)/2.
 * Expectations reduce to per-edge and per-vertex formulas over the joint
 * neighborhood of the touched qubits, so evaluation is O(n + m) with no
 * statevector.
 */

/*
 * Coefficients of the Pauli Z axis conjugated through the tilted mixer:
 * with V = R_y(alpha) exp(-i beta1 X) R_y(-alpha),
 * V^dag Z V = cz Z + cy Y + cx X and cz^2 + cy^2 + cx^2 = 1.
 */
struct MixerCoeffs {
    double cz = 1.0;
    double cy = 0.0;
    double cx = 0.0;
};

MixerCoeffs mixer_coeffs(double alpha, double beta1);

/* Axis order of EdgePairTerms on both indices. */
enum PauliAxis : int { pauli_z = 0, pauli_y = 1, pauli_x = 2 };

/*
 * E[P][Q] = <phi| P_j Q_k |phi> for P, Q in {Z, Y, X}, where
 * |phi> = exp(-i gamma1 H_C) R_y(delta) |psi_c>. Only the cost terms on
 * edges incident to j or k survive the conjugation, so the values depend
 * on the six neighborhood vertices alone; shared neighbors (triangle and
 * square overlaps) cancel pairwise because Z^2 = I.
 */
using EdgePairTerms = std::array<std::array<double, 3>, 3>;

EdgePairTerms edge_pair_terms(const EdgeNeighborhood& nb, const VariantConfig& cfg,
                              double gamma1);

/* Single-body analogues for vertex j and its three neighbors. */
struct VertexTerms {
    double ez = 0.0;
    double ey = 0.0;
    double ex = 0.0;
};

VertexTerms vertex_terms(int j, const std::array<int, 3>& neighbors, const VariantConfig& cfg,
                         double gamma1);

/*
 * <H_C> assembled over all edges:
 * sum_(j,k) [ (1/2) sum_PQ cj_P ck_Q E[P][Q] - 1/2 ].
 * Requires a 3-regular graph and a config of matching size.
 */
double expected_cost(const Graph& g, const VariantConfig& cfg, double gamma1, double beta1);

/*
 * <Z_j> for every vertex: cz E_Z + cy E_Y + cx E_X, each single-body term
 * evaluated once on the vertex's full three-neighbor surrounding.
 */
std::vector<double> expected_z(const Graph& g, const VariantConfig& cfg, double gamma1,
                               double beta1);

/*
 * Family tag for warm_detuning_energy. `recovery` detunes the mixer angle
 * around beta1 = pi/2 with the cost angle at pi and bias-matched fields;
 * `unrotated` freezes the pre-rotation (delta = 0), where the same curve
 * arises around beta1 = 0 for any cost angle.
 */
enum class DetuningMode { recovery, unrotated };

/*
 * Closed-form energy of a bias-matched warm start under mixer detuning
 * dbeta: with p = (1 + 3 cos(2 dbeta)) / 4,
 *
 *   energy = p^2 (|E|/2 - warm_cut) - |E|/2.
 *
 * Both families share the curve; at dbeta = 0 it returns -warm_cut, and for
 * any warm cut of at least |E|/2 it never drops below that value, so
 * detuning cannot improve such a warm start. A derivation check for the
 * engine, not part of the solve path.
 */
double warm_detuning_energy(const Graph& g, int warm_cut, double dbeta, DetuningMode mode);

}  // namespace warmcut

#endif
