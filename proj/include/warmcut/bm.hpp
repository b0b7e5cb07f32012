#ifndef WARMCUT_BM_HPP
#define WARMCUT_BM_HPP

#include <cstdint>
#include <vector>

#include "warmcut/graph.hpp"

namespace warmcut {

/*
 * Rank-2 relaxation of MaxCut: vertex j carries a unit vector
 * (cos theta_j, sin theta_j) and the relaxed objective is
 *
 *   F(theta) = sum_{(j,k) in E} (1/2)(1 - cos(theta_j - theta_k)).
 *
 * value lies in [0, |E|] and is invariant under global shifts and
 * reflections of the angles.
 */
struct AngleSolution {
    std::vector<double> theta;  // wrapped to [0, 2*pi) on output
    double value = 0.0;
};

/* The relaxed objective F at the given angles. */
double bm_objective(const Graph& g, const std::vector<double>& theta);

/*
 * Best local optimum over `restarts` runs of adaptive-moment ascent from
 * uniform-random initial angles. A run is converged when the gradient
 * infinity-norm drops to 1e-6, with a 5000-iteration ceiling.
 */
AngleSolution solve_bm_mc2(const Graph& g, int restarts = 10, std::uint64_t seed = 0);

/* Shift all angles so that theta[index] becomes 0; value is unchanged. */
AngleSolution vertex_at_top(const AngleSolution& sol, int index);

/* Shift all angles by one U[0, 2*pi) draw; value is unchanged. */
AngleSolution uniform_rotation(const AngleSolution& sol, std::uint64_t seed);

/* Round by a random diameter: bit_j = 0 iff cos(theta_j - phi) >= 0, phi ~ U[0, 2*pi). */
Assignment project_angles(const AngleSolution& sol, std::uint64_t seed);

}  // namespace warmcut

#endif
