#ifndef WARMCUT_EXACT_HPP
#define WARMCUT_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "warmcut/graph.hpp"
#include "warmcut/variant.hpp"

namespace warmcut {

// Thrown when an instance exceeds a hard size cap of an exhaustive engine.
class CapacityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExactCut {
    int value;
    Assignment witness;
};

// Exhaustive MaxCut via Gray-code enumeration: one bit flips per step, the
// cut is updated incrementally in O(degree). Vertex 0 is pinned to side 0 by
// the global flip symmetry, so 2^(n-1) assignments are visited.
ExactCut maxcut_bruteforce(const Graph& g, int cap = 26);

struct Expectation {
    double energy;          // <H_C> with H_C = sum over edges of (Z_j Z_k - 1)/2
    std::vector<double> z;  // <Z_j> for every vertex
};

// Full 2^n statevector simulation of the level-1 circuit (see VariantConfig).
// Ground truth for the closed-form engine; capped at 16 qubits.
Expectation statevector_expectation(const Graph& g, const VariantConfig& cfg,
                                    double gamma1, double beta1, int cap = 16);

// Checks exp(-i pi H_C) == (global phase) * prod_j Z_j on a random state:
// true iff the maximum amplitude deviation after phase alignment is <= 1e-10.
// Holds exactly for odd-regular graphs; even-regular inputs come out false.
bool check_pi_gamma_identity(const Graph& g, std::uint64_t seed = 0);

// Same observable set as statevector_expectation, but each edge term is
// simulated densely on its <= 6-qubit neighborhood (and each <Z_j> on j's
// 4-qubit neighborhood). Only the five edges incident to an edge's endpoints
// affect its term -- cost-phase factors on spectator pairs commute through
// the observable and cancel -- so this scales to thousands of vertices.
Expectation local_subgraph_expectation(const Graph& g, const VariantConfig& cfg,
                                       double gamma1, double beta1);

}  // namespace warmcut

#endif  // WARMCUT_EXACT_HPP
