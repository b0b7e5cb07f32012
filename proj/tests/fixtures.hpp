#ifndef WARMCUT_TEST_FIXTURES_HPP
#define WARMCUT_TEST_FIXTURES_HPP

#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "warmcut/graph.hpp"
#include "warmcut/variant.hpp"

namespace fixtures {

inline warmcut::Graph k4() {
    return warmcut::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline warmcut::Graph k33() {
    std::vector<warmcut::Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) e.push_back({u, v});
    return warmcut::Graph(6, e);
}

// Two triangles (0,1,2) and (3,4,5) joined by the matching i -- i+3.
inline warmcut::Graph prism() {
    return warmcut::Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                              {0, 3}, {1, 4}, {2, 5}});
}

// Outer 5-cycle 0..4, spokes i -- 5+i, inner pentagram 5+i -- 5+((i+2) mod 5).
inline warmcut::Graph petersen() {
    std::vector<warmcut::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, 5 + i});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return warmcut::Graph(10, e);
}

// Cube graph: vertices are 3-bit strings, edges flip one bit.
inline warmcut::Graph cube() {
    std::vector<warmcut::Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.push_back({v, v ^ (1 << b)});
    return warmcut::Graph(8, e);
}

inline warmcut::Graph cycle4() {
    return warmcut::Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline warmcut::Graph single_edge() { return warmcut::Graph(2, {{0, 1}}); }

// Deliberately naive exhaustive MaxCut: direct cut_value over all 2^n
// assignments. Independent of the Gray-code solver; n kept tiny by callers.
inline int naive_maxcut(const warmcut::Graph& g) {
    int best = 0;
    const int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        warmcut::Assignment a(n);
        for (int v = 0; v < n; ++v) a[v] = (mask >> v) & 1u;
        best = std::max(best, warmcut::cut_value(g, a));
    }
    return best;
}

// A valid random configuration of the variant selected by `which` (mod 4).
// Warm data (bits, bias fields, GW fractions, angles) is drawn fresh.
inline warmcut::VariantConfig random_config(int n, int which, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (which % 4) {
        case 0:
            return warmcut::encode_standard(n);
        case 1: {
            std::vector<double> c(n);
            for (auto& x : c) x = unit(rng);
            return warmcut::encode_ws_qaoa(c, 0.5 * unit(rng));
        }
        case 2: {
            warmcut::Assignment bits(n);
            std::vector<double> h(n);
            for (int v = 0; v < n; ++v) {
                bits[v] = unit(rng) < 0.5 ? 0 : 1;
                h[v] = 4.0 * unit(rng) - 2.0;
            }
            return warmcut::encode_ws_ab(bits, h);
        }
        default: {
            std::vector<double> theta(n);
            for (auto& t : theta) t = 2.0 * std::numbers::pi * unit(rng);
            return warmcut::encode_warmest(theta);
        }
    }
}

}  // namespace fixtures

#endif  // WARMCUT_TEST_FIXTURES_HPP
