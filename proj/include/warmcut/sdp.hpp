#ifndef WARMCUT_SDP_HPP
#define WARMCUT_SDP_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "warmcut/graph.hpp"

namespace warmcut {

/* Thrown when a dense factorization or linear solve breaks down. */
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/*
 * Primal-dual iterate of the MaxCut semidefinite relaxation
 *
 *   max L@Y   s.t. diag(Y) = (1/4) 1,  Y >= 0 (psd)
 *   min a^T b s.t. Z = Diag(b) - L >= 0 (psd),  a = (1/4) 1
 *
 * where L is the graph Laplacian and @ is the elementwise (Frobenius)
 * product. objective = L@Y equals the relaxed cut value.
 */
struct SdpState {
    Eigen::MatrixXd Y;
    Eigen::VectorXd b;
    Eigen::MatrixXd Z;
    double mu = 0.0;
    double gap = 0.0;
    double objective = 0.0;
    int iterations = 0;
    bool converged = false;
};

/* Numerical breakdown inside the interior-point loop; carries the last iterate. */
class SdpBreakdown : public NumericalError {
  public:
    SdpBreakdown(const std::string& what, SdpState state)
        : NumericalError(what), state_(std::move(state)) {}
    const SdpState& state() const { return state_; }

  private:
    SdpState state_;
};

/*
 * Unit-norm relaxed vectors, one row per vertex, satisfying
 * vectors * vectors^T ~= 4Y.
 */
struct GramVectors {
    Eigen::MatrixXd vectors;
};

struct GwResult {
    Assignment best;
    int cut = 0;
    double sdp_objective = 0.0;
};

/*
 * Interior-point (barrier) solver for the MaxCut SDP. Stops when the
 * relative duality gap |a.b - L@Y| / (1 + |L@Y|) drops to tol; returns
 * the best iterate with converged=false if max_iter runs out first.
 * Throws SdpBreakdown when a factorization or the step system fails.
 */
SdpState solve_sdp(const Graph& g, double tol = 1e-7, int max_iter = 200);

/*
 * Factor 4Y into unit rows via a symmetric eigendecomposition, clamping
 * negative eigenvalues to zero before renormalizing.
 */
GramVectors gram_vectors(const Eigen::MatrixXd& Y);

/* Round by a random hyperplane: bit_j = 0 iff y_j . r >= 0, r standard normal. */
Assignment random_projection(const GramVectors& v, std::uint64_t seed);

/* One SDP solve followed by `projections` independent roundings; keeps the best. */
GwResult gw_solve(const Graph& g, int projections, std::uint64_t seed);

/*
 * Smallest projection count whose best cut reaches `target`, streaming
 * roundings from the same seed sequence as gw_solve; returns cap if the
 * target is never reached.
 */
int projections_to_match(const Graph& g, int target, int cap, std::uint64_t seed);

}  // namespace warmcut

#endif
