#include "warmcut/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "warmcut/seeds.hpp"

namespace warmcut {

namespace {

using cxd = std::complex<double>;

void check_config(const Graph& g, const VariantConfig& cfg) {
    const auto n = static_cast<std::size_t>(g.n());
    if (cfg.warm_bits.size() != n || cfg.alpha.size() != n || cfg.delta.size() != n)
        throw std::invalid_argument("variant config does not match graph size.");
}

// In-place 2x2 gate on one qubit of a dense amplitude vector.
void apply_1q(cxd* psi, std::size_t dim, int q, cxd m00, cxd m01, cxd m10, cxd m11) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & bit) continue;
        cxd a0 = psi[base];
        cxd a1 = psi[base | bit];
        psi[base] = m00 * a0 + m01 * a1;
        psi[base | bit] = m10 * a0 + m11 * a1;
    }
}

void apply_ry(cxd* psi, std::size_t dim, int q, double angle) {
    double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    apply_1q(psi, dim, q, c, -s, s, c);
}

void apply_rx_mixer(cxd* psi, std::size_t dim, int q, double beta) {
    // exp(-i beta X)
    cxd c{std::cos(beta), 0.0}, ims{0.0, -std::sin(beta)};
    apply_1q(psi, dim, q, c, ims, ims, c);
}

// cut(b) for every basis state of the (sub)graph described by `edges` over
// `n` local qubits.
std::vector<int> cut_table(int n, const std::vector<Edge>& edges) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<int> cut(dim, 0);
    for (const auto& [u, v] : edges)
        for (std::size_t b = 0; b < dim; ++b)
            cut[b] += static_cast<int>(((b >> u) ^ (b >> v)) & 1u);
    return cut;
}

void apply_cost_phase(cxd* psi, const std::vector<int>& cut, double gamma) {
    // exp(-i gamma H_C)|b> = exp(+i gamma cut(b))|b>
    for (std::size_t b = 0; b < cut.size(); ++b)
        psi[b] *= std::polar(1.0, gamma * cut[b]);
}

}  // namespace

ExactCut maxcut_bruteforce(const Graph& g, int cap) {
    const int n = g.n();
    if (cap < 1 || cap > 62) throw std::invalid_argument("maxcut_bruteforce: unusable cap.");
    if (n > cap) throw CapacityError("maxcut_bruteforce: instance exceeds enumeration cap.");

    Assignment bits(n, 0);
    int cut = 0;
    ExactCut best{0, bits};
    const std::uint64_t steps = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = 1 + std::countr_zero(k);
        int delta = 0;
        for (int u : g.neighbors(v)) delta += (bits[u] == bits[v]) ? 1 : -1;
        bits[v] ^= 1u;
        cut += delta;
        if (cut > best.value) best = {cut, bits};
    }
    return best;
}

Expectation statevector_expectation(const Graph& g, const VariantConfig& cfg,
                                    double gamma1, double beta1, int cap) {
    const int n = g.n();
    if (cap < 1 || cap > 28) throw std::invalid_argument("statevector_expectation: unusable cap.");
    if (n > cap) throw CapacityError("statevector_expectation: instance exceeds statevector cap.");
    check_config(g, cfg);

    const std::size_t dim = std::size_t{1} << n;
    std::vector<cxd> psi(dim, cxd{0.0, 0.0});
    std::size_t start = 0;
    for (int j = 0; j < n; ++j)
        if (cfg.warm_bits[j]) start |= std::size_t{1} << j;
    psi[start] = 1.0;

    const std::vector<int> cut = cut_table(n, g.edges());

    for (int j = 0; j < n; ++j) apply_ry(psi.data(), dim, j, cfg.delta[j]);
    apply_cost_phase(psi.data(), cut, gamma1);
    for (int j = 0; j < n; ++j) apply_ry(psi.data(), dim, j, -cfg.alpha[j]);
    for (int j = 0; j < n; ++j) apply_rx_mixer(psi.data(), dim, j, beta1);
    for (int j = 0; j < n; ++j) apply_ry(psi.data(), dim, j, cfg.alpha[j]);

    Expectation out{0.0, std::vector<double>(n, 0.0)};
    for (std::size_t b = 0; b < dim; ++b) {
        const double p = std::norm(psi[b]);
        out.energy -= p * cut[b];
        for (int j = 0; j < n; ++j)
            out.z[j] += p * (1.0 - 2.0 * static_cast<double>((b >> j) & 1u));
    }
    return out;
}

bool check_pi_gamma_identity(const Graph& g, std::uint64_t seed) {
    const int n = g.n();
    if (n > 14) throw CapacityError("check_pi_gamma_identity: instance exceeds cap.");

    const std::size_t dim = std::size_t{1} << n;
    std::mt19937_64 rng(split_seed(seed, stream::pi_gamma_state, 0));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cxd> psi(dim);
    double norm2 = 0.0;
    for (auto& a : psi) {
        a = cxd{normal(rng), normal(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : psi) a *= inv;

    const std::vector<int> cut = cut_table(n, g.edges());
    std::vector<cxd> lhs(psi), rhs(psi);
    for (std::size_t b = 0; b < dim; ++b) {
        // exp(-i pi H_C)|b> = (-1)^cut(b) |b>;  prod_j Z_j |b> = (-1)^popcount(b) |b>
        if (cut[b] & 1) lhs[b] = -lhs[b];
        if (std::popcount(b) & 1) rhs[b] = -rhs[b];
    }

    std::size_t ref = 0;
    for (std::size_t b = 1; b < dim; ++b)
        if (std::norm(lhs[b]) > std::norm(lhs[ref])) ref = b;
    const cxd phase = lhs[ref] / rhs[ref];

    double max_dev = 0.0;
    for (std::size_t b = 0; b < dim; ++b)
        max_dev = std::max(max_dev, std::abs(lhs[b] - phase * rhs[b]));
    return max_dev <= 1e-10;
}

Expectation local_subgraph_expectation(const Graph& g, const VariantConfig& cfg,
                                       double gamma1, double beta1) {
    if (!g.is_cubic())
        throw std::invalid_argument("local_subgraph_expectation: graph must be 3-regular.");
    check_config(g, cfg);

    Expectation out{0.0, std::vector<double>(g.n(), 0.0)};

    // One dense simulation of a <= 6-qubit neighborhood. `verts` lists the
    // global vertices of the subgraph (observable vertices first), `edges`
    // the incident edges in local coordinates, `mixed` how many of the
    // leading local qubits receive the mixer sandwich.
    auto simulate = [&](const std::vector<int>& verts, const std::vector<Edge>& edges,
                        int mixed) {
        const int q = static_cast<int>(verts.size());
        const std::size_t dim = std::size_t{1} << q;
        std::vector<cxd> psi(dim, cxd{0.0, 0.0});
        std::size_t start = 0;
        for (int i = 0; i < q; ++i)
            if (cfg.warm_bits[verts[i]]) start |= std::size_t{1} << i;
        psi[start] = 1.0;

        const std::vector<int> cut = cut_table(q, edges);
        for (int i = 0; i < q; ++i) apply_ry(psi.data(), dim, i, cfg.delta[verts[i]]);
        apply_cost_phase(psi.data(), cut, gamma1);
        for (int i = 0; i < mixed; ++i) apply_ry(psi.data(), dim, i, -cfg.alpha[verts[i]]);
        for (int i = 0; i < mixed; ++i) apply_rx_mixer(psi.data(), dim, i, beta1);
        for (int i = 0; i < mixed; ++i) apply_ry(psi.data(), dim, i, cfg.alpha[verts[i]]);
        return psi;
    };

    for (const auto& [j, k] : g.edges()) {
        std::vector<int> verts{j, k};
        for (int u : g.neighbors(j))
            if (u != k) verts.push_back(u);
        for (int u : g.neighbors(k))
            if (u != j && std::find(verts.begin(), verts.end(), u) == verts.end())
                verts.push_back(u);

        auto local = [&](int global) {
            return static_cast<int>(std::find(verts.begin(), verts.end(), global) -
                                    verts.begin());
        };
        std::vector<Edge> edges;
        edges.push_back({0, 1});
        for (int u : g.neighbors(j))
            if (u != k) edges.push_back({0, local(u)});
        for (int u : g.neighbors(k))
            if (u != j) edges.push_back({1, local(u)});

        const auto psi = simulate(verts, edges, 2);
        double zz = 0.0;
        for (std::size_t b = 0; b < psi.size(); ++b) {
            const double s0 = (b & 1u) ? -1.0 : 1.0;
            const double s1 = (b & 2u) ? -1.0 : 1.0;
            zz += std::norm(psi[b]) * s0 * s1;
        }
        out.energy += 0.5 * (zz - 1.0);
    }

    for (int j = 0; j < g.n(); ++j) {
        std::vector<int> verts{j};
        for (int u : g.neighbors(j)) verts.push_back(u);
        std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
        const auto psi = simulate(verts, edges, 1);
        double zj = 0.0;
        for (std::size_t b = 0; b < psi.size(); ++b)
            zj += std::norm(psi[b]) * ((b & 1u) ? -1.0 : 1.0);
        out.z[j] = zj;
    }
    return out;
}

}  // namespace warmcut
