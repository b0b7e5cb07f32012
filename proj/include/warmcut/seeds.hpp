#ifndef WARMCUT_SEEDS_HPP
#define WARMCUT_SEEDS_HPP

#include <cstdint>

namespace warmcut {

/*
 * Deterministic seed derivation. Every randomized stage draws its seed as
 * split_seed(master, stream, counter) so that independent stages (graph
 * generation, projections, restarts, ...) never share a generator and
 * parallel workers stay reproducible regardless of scheduling.
 */

namespace stream {
inline constexpr std::uint64_t graph_gen = 1;
inline constexpr std::uint64_t gw_projection = 2;
inline constexpr std::uint64_t bm_restart = 3;
inline constexpr std::uint64_t bm_rotation = 4;
inline constexpr std::uint64_t angle_init = 5;
inline constexpr std::uint64_t oracle_draw = 6;
inline constexpr std::uint64_t instance = 7;
inline constexpr std::uint64_t pi_gamma_state = 8;
}  // namespace stream

// splitmix64 finalizer; full-period avalanche on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t counter) {
    return mix64(mix64(mix64(master) ^ stream) ^ counter);
}

}  // namespace warmcut

#endif  // WARMCUT_SEEDS_HPP
