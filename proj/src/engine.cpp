#include "warmcut/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace warmcut {

MixerCoeffs mixer_coeffs(double alpha, double beta1) {
    const double ca = std::cos(alpha);
    const double sb = std::sin(beta1);
    return MixerCoeffs{1.0 - 2.0 * ca * ca * sb * sb, ca * std::sin(2.0 * beta1),
                       -std::sin(2.0 * alpha) * sb * sb};
}

EdgePairTerms edge_pair_terms(const EdgeNeighborhood& nb, const VariantConfig& cfg,
                              double gamma1) {
    const double c = std::cos(gamma1);
    const double s = std::sin(gamma1);
    const double c2 = c * c;
    const double s2 = s * s;

    /* cos/sin of the pre-rotation folded with the classical sign <Z_v>_c. */
    const auto P = [&cfg](int v) { return std::cos(cfg.delta[v]) * warm_sign(cfg.warm_bits[v]); };
    const auto Q = [&cfg](int v) { return std::sin(cfg.delta[v]) * warm_sign(cfg.warm_bits[v]); };
    /* Z-string expectations; a vertex appearing twice cancels since Z^2 = I. */
    const auto zpair = [&](int u, int v) { return u == v ? 1.0 : P(u) * P(v); };
    const auto ztriple = [&](int a, int b, int x) {
        if (x == a) return P(b);
        if (x == b) return P(a);
        return P(a) * P(b) * P(x);
    };

    const int j = nb.j, k = nb.k;
    const int j1 = nb.j1, j2 = nb.j2, k1 = nb.k1, k2 = nb.k2;

    EdgePairTerms e{};
    e[pauli_z][pauli_z] = P(j) * P(k);

    e[pauli_z][pauli_y] =
        s * Q(k) * (c2 + c2 * P(j) * P(k1) + c2 * P(j) * P(k2) - s2 * P(k1) * P(k2));
    e[pauli_y][pauli_z] =
        s * Q(j) * (c2 + c2 * P(k) * P(j1) + c2 * P(k) * P(j2) - s2 * P(j1) * P(j2));

    e[pauli_z][pauli_x] =
        c * Q(k) * (c2 * P(j) - s2 * (P(k1) + P(k2) + P(j) * P(k1) * P(k2)));
    e[pauli_x][pauli_z] =
        c * Q(j) * (c2 * P(k) - s2 * (P(j1) + P(j2) + P(k) * P(j1) * P(j2)));

    e[pauli_y][pauli_y] = c2 * s2 * Q(j) * Q(k) *
                          (zpair(j1, k1) + zpair(j1, k2) + zpair(j2, k1) + zpair(j2, k2));

    double tails = 1.0;
    switch (nb.cls) {
        case EdgeNeighborhood::Class::A:
            tails = P(j1) * P(j2) * P(k1) * P(k2);
            break;
        case EdgeNeighborhood::Class::B:
            tails = P(j2) * P(k2);
            break;
        case EdgeNeighborhood::Class::C:
            tails = 1.0;
            break;
    }
    e[pauli_x][pauli_x] =
        Q(j) * Q(k) * (c2 * c2 - c2 * s2 * (P(j1) * P(j2) + P(k1) * P(k2)) + s2 * s2 * tails);

    e[pauli_x][pauli_y] = c * s * Q(j) * Q(k) *
                          (c2 * (P(k1) + P(k2)) - s2 * (ztriple(j1, j2, k1) + ztriple(j1, j2, k2)));
    e[pauli_y][pauli_x] = c * s * Q(j) * Q(k) *
                          (c2 * (P(j1) + P(j2)) - s2 * (ztriple(k1, k2, j1) + ztriple(k1, k2, j2)));

    return e;
}

VertexTerms vertex_terms(int j, const std::array<int, 3>& neighbors, const VariantConfig& cfg,
                         double gamma1) {
    const double c = std::cos(gamma1);
    const double s = std::sin(gamma1);
    const double c2 = c * c;
    const double s2 = s * s;

    const auto P = [&cfg](int v) { return std::cos(cfg.delta[v]) * warm_sign(cfg.warm_bits[v]); };
    const double qj = std::sin(cfg.delta[j]) * warm_sign(cfg.warm_bits[j]);
    const double p1 = P(neighbors[0]);
    const double p2 = P(neighbors[1]);
    const double p3 = P(neighbors[2]);

    VertexTerms t;
    t.ez = P(j);
    t.ey = s * qj * (c2 * (p1 + p2 + p3) - s2 * p1 * p2 * p3);
    t.ex = c * qj * (c2 - s2 * (p1 * p2 + p1 * p3 + p2 * p3));
    return t;
}

namespace {

void check_engine_inputs(const Graph& g, const VariantConfig& cfg, const char* who) {
    if (!g.is_cubic()) throw std::invalid_argument(std::string(who) + ": graph must be 3-regular.");
    if (cfg.n() != g.n())
        throw std::invalid_argument(std::string(who) + ": config size must match the graph.");
}

}  // namespace

double expected_cost(const Graph& g, const VariantConfig& cfg, double gamma1, double beta1) {
    check_engine_inputs(g, cfg, "expected_cost");

    double energy = 0.0;
    for (const Edge& edge : g.edges()) {
        const EdgeNeighborhood nb = classify_edge(g, edge);
        const EdgePairTerms e = edge_pair_terms(nb, cfg, gamma1);
        const MixerCoeffs mj = mixer_coeffs(cfg.alpha[edge.first], beta1);
        const MixerCoeffs mk = mixer_coeffs(cfg.alpha[edge.second], beta1);
        const double cj[3] = {mj.cz, mj.cy, mj.cx};
        const double ck[3] = {mk.cz, mk.cy, mk.cx};

        double zz = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) zz += cj[p] * ck[q] * e[p][q];
        energy += 0.5 * zz - 0.5;
    }
    return energy;
}

std::vector<double> expected_z(const Graph& g, const VariantConfig& cfg, double gamma1,
                               double beta1) {
    check_engine_inputs(g, cfg, "expected_z");

    std::vector<double> z(static_cast<std::size_t>(g.n()), 0.0);
    for (int j = 0; j < g.n(); ++j) {
        const std::vector<int>& nbrs = g.neighbors(j);
        const VertexTerms t =
            vertex_terms(j, {nbrs[0], nbrs[1], nbrs[2]}, cfg, gamma1);
        const MixerCoeffs m = mixer_coeffs(cfg.alpha[j], beta1);
        z[static_cast<std::size_t>(j)] = m.cz * t.ez + m.cy * t.ey + m.cx * t.ex;
    }
    return z;
}

double warm_detuning_energy(const Graph& g, int warm_cut, double dbeta, DetuningMode mode) {
    if (!g.is_cubic())
        throw std::invalid_argument("warm_detuning_energy: graph must be 3-regular.");
    if (warm_cut < 0 || warm_cut > g.m())
        throw std::invalid_argument("warm_detuning_energy: warm_cut outside [0, |E|].");
    if (mode != DetuningMode::recovery && mode != DetuningMode::unrotated)
        throw std::invalid_argument("warm_detuning_energy: unknown mode.");

    const double p = (1.0 + 3.0 * std::cos(2.0 * dbeta)) / 4.0;
    const double half_edges = g.m() / 2.0;
    return p * p * (half_edges - warm_cut) - half_edges;
}

}  // namespace warmcut
