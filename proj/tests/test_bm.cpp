#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "warmcut/bm.hpp"
#include "warmcut/graph.hpp"
#include "warmcut/sdp.hpp"
#include "warmcut/seeds.hpp"

using namespace warmcut;
constexpr double pi = std::numbers::pi;

namespace {

double gradient_inf_norm(const Graph& g, const std::vector<double>& theta) {
    std::vector<double> grad(theta.size(), 0.0);
    for (const auto& [j, k] : g.edges()) {
        const double s = 0.5 * std::sin(theta[j] - theta[k]);
        grad[j] += s;
        grad[k] -= s;
    }
    double m = 0.0;
    for (double x : grad) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("objective evaluation") {
    const Graph k4 = fixtures::k4();
    CHECK(bm_objective(k4, {0.0, 0.0, pi, pi}) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(bm_objective(k4, {1.3, 1.3, 1.3, 1.3}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(bm_objective(k4, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("objective is shift and reflection invariant") {
    const Graph g = generate_u3r(10, 5);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * pi);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> theta(10), shifted(10), reflected(10);
        const double c = uniform(rng);
        for (int j = 0; j < 10; ++j) {
            theta[j] = uniform(rng);
            shifted[j] = theta[j] + c;
            reflected[j] = -theta[j];
        }
        const double base = bm_objective(g, theta);
        CHECK(std::abs(bm_objective(g, shifted) - base) <= 1e-12);
        CHECK(std::abs(bm_objective(g, reflected) - base) <= 1e-12);
        CHECK(base >= 0.0);
        CHECK(base <= g.m());
    }
}

TEST_CASE("ascent finds the antipodal optimum of a single edge") {
    AngleSolution sol = solve_bm_mc2(fixtures::single_edge(), 3, 11);
    CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-9));
    const double d = std::abs(sol.theta[0] - sol.theta[1]);
    CHECK(std::min(d, 2.0 * pi - d) == doctest::Approx(pi).epsilon(1e-5));
}

TEST_CASE("ascent reaches the bipartite optimum") {
    AngleSolution sol = solve_bm_mc2(fixtures::k33(), 10, 4);
    CHECK(sol.value == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(gradient_inf_norm(fixtures::k33(), sol.theta) <= 1e-5);
}

TEST_CASE("result nestles under the semidefinite bound") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = generate_u3r(static_cast<int>(8 + 2 * (seed % 4)), 60 + seed);
        AngleSolution sol = solve_bm_mc2(g, 10, seed);
        SdpState sdp = solve_sdp(g);
        CHECK(sol.value <= sdp.objective + 1e-5);
        CHECK(sol.value >= 0.0);
        for (double t : sol.theta) {
            CHECK(t >= 0.0);
            CHECK(t < 2.0 * pi);
        }
    }
}

TEST_CASE("ascent never loses ground against its starting point") {
    const Graph g = generate_u3r(12, 33);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        // Restart 0 draws its initial angles from this exact stream.
        std::mt19937_64 rng(split_seed(seed, stream::bm_restart, 0));
        std::uniform_real_distribution<double> uniform(0.0, 2.0 * pi);
        std::vector<double> init(12);
        for (double& t : init) t = uniform(rng);

        AngleSolution sol = solve_bm_mc2(g, 1, seed);
        CHECK(sol.value >= bm_objective(g, init) - 1e-12);
    }
    CHECK_THROWS_AS(solve_bm_mc2(g, 0, 0), std::invalid_argument);
}

TEST_CASE("determinism across repeated solves") {
    const Graph g = generate_u3r(10, 77);
    AngleSolution a = solve_bm_mc2(g, 4, 5);
    AngleSolution b = solve_bm_mc2(g, 4, 5);
    CHECK(a.value == b.value);
    CHECK(a.theta == b.theta);
}

TEST_CASE("vertex-at-top shift") {
    AngleSolution sol = solve_bm_mc2(fixtures::prism(), 5, 2);
    AngleSolution shifted = vertex_at_top(sol, 3);
    CHECK(shifted.theta[3] == doctest::Approx(0.0));
    CHECK(shifted.value == sol.value);
    CHECK(bm_objective(fixtures::prism(), shifted.theta) == doctest::Approx(sol.value).epsilon(1e-12));

    AngleSolution twice = vertex_at_top(shifted, 3);
    for (std::size_t j = 0; j < sol.theta.size(); ++j)
        CHECK(twice.theta[j] == doctest::Approx(shifted.theta[j]));

    CHECK_THROWS_AS(vertex_at_top(sol, 6), std::invalid_argument);
    CHECK_THROWS_AS(vertex_at_top(sol, -1), std::invalid_argument);
}

TEST_CASE("uniform rotation preserves the objective") {
    AngleSolution sol = solve_bm_mc2(fixtures::prism(), 5, 2);
    AngleSolution rot = uniform_rotation(sol, 99);
    CHECK(rot.value == sol.value);
    CHECK(bm_objective(fixtures::prism(), rot.theta) == doctest::Approx(sol.value).epsilon(1e-12));
    for (double t : rot.theta) {
        CHECK(t >= 0.0);
        CHECK(t < 2.0 * pi);
    }

    AngleSolution again = uniform_rotation(sol, 99);
    CHECK(again.theta == rot.theta);
}

TEST_CASE("angle rounding") {
    AngleSolution groups;
    groups.theta = {0.1, 0.1, 0.1, 0.1 + pi, 0.1 + pi, 0.1 + pi};
    groups.value = 9.0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Assignment bits = project_angles(groups, seed);
        CHECK(cut_value(fixtures::k33(), bits) == 9);
    }

    AngleSolution flat;
    flat.theta.assign(6, 2.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Assignment bits = project_angles(flat, seed);
        for (std::uint8_t b : bits) CHECK(b == bits[0]);
        CHECK(cut_value(fixtures::k33(), bits) == 0);
    }
}

TEST_CASE("level-0 guarantee curve stays non-negative") {
    // f(t) = (1/2)(1 - cos(t)/2) - (3/4)(t/pi) on a dense grid of [0, pi]
    const int points = 10000;
    double min_value = 1e300;
    for (int i = 0; i < points; ++i) {
        const double t = pi * i / (points - 1);
        const double f = 0.5 * (1.0 - 0.5 * std::cos(t)) - 0.75 * (t / pi);
        min_value = std::min(min_value, f);
    }
    CHECK(min_value >= 0.0);
}
