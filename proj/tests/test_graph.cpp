#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "warmcut/graph.hpp"

using namespace warmcut;

TEST_CASE("graph container validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges()[0] == Edge{0, 1});  // canonical order, smaller endpoint first
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("generate_u3r produces simple cubic graphs deterministically") {
    for (int n : {4, 10, 30, 200}) {
        for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
            Graph g = generate_u3r(n, seed);
            CHECK(g.n() == n);
            CHECK(g.m() == 3 * n / 2);
            CHECK(g.is_cubic());
            Graph h = generate_u3r(n, seed);
            CHECK(g.edges() == h.edges());
        }
    }
    // only one cubic graph exists on 4 vertices
    CHECK(generate_u3r(4, 42).edges() == fixtures::k4().edges());
    CHECK_THROWS_AS(generate_u3r(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_u3r(2, 0), std::invalid_argument);
}

TEST_CASE("generate_u3r invariants over many seeds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 4 + 2 * static_cast<int>(seed % 99);  // 4..200
        Graph g = generate_u3r(n, seed);
        CHECK(g.is_cubic());
        CHECK(g.m() == 3 * n / 2);
        std::set<Edge> uniq(g.edges().begin(), g.edges().end());
        CHECK(static_cast<int>(uniq.size()) == g.m());
        for (const auto& [u, v] : g.edges()) CHECK(u < v);
    }
}

TEST_CASE("cut_value") {
    Graph g = fixtures::k4();
    CHECK(cut_value(g, {0, 0, 1, 1}) == 4);
    CHECK(cut_value(g, {0, 0, 0, 0}) == 0);
    CHECK(cut_value(fixtures::k33(), {0, 0, 0, 1, 1, 1}) == 9);
    CHECK_THROWS_AS(cut_value(g, {0, 1}), std::invalid_argument);

    // global bit-flip symmetry and range on random instances
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph r = generate_u3r(20, seed);
        Assignment a(20), b(20);
        for (int v = 0; v < 20; ++v) {
            a[v] = static_cast<std::uint8_t>((seed * 2654435769u + v * 40503u) >> 13 & 1u);
            b[v] = a[v] ^ 1u;
        }
        int c = cut_value(r, a);
        CHECK(c == cut_value(r, b));
        CHECK(c >= 0);
        CHECK(c <= r.m());
    }
}

TEST_CASE("classify_edge subgraph classes") {
    Graph k4 = fixtures::k4();
    for (const auto& e : k4.edges()) {
        auto nb = classify_edge(k4, e);
        CHECK(nb.cls == EdgeNeighborhood::Class::C);
        CHECK(nb.j1 == nb.k1);
        CHECK(nb.j2 == nb.k2);
    }
    Graph k33 = fixtures::k33();
    for (const auto& e : k33.edges()) {
        CHECK(classify_edge(k33, e).cls == EdgeNeighborhood::Class::A);
    }

    // triangle edge of the prism shares exactly one neighbor
    Graph pr = fixtures::prism();
    auto nb = classify_edge(pr, {0, 1});
    CHECK(nb.cls == EdgeNeighborhood::Class::B);
    CHECK(nb.j1 == 2);  // shared vertex normalized into both first slots
    CHECK(nb.k1 == 2);
    CHECK(nb.j2 == 3);
    CHECK(nb.k2 == 4);
    // matching edge of the prism: neighborhoods {1,2} and {4,5} are disjoint
    CHECK(classify_edge(pr, {0, 3}).cls == EdgeNeighborhood::Class::A);

    CHECK_THROWS_AS(classify_edge(k4, Edge{0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(classify_edge(fixtures::cycle4(), Edge{0, 1}), std::invalid_argument);

    // classes partition the edge set of any cubic graph
    for (std::uint64_t seed : {5ull, 6ull}) {
        Graph g = generate_u3r(16, seed);
        int count = 0;
        for (const auto& e : g.edges()) {
            auto c = classify_edge(g, e);
            CHECK((c.j1 != c.j2));
            CHECK((c.k1 != c.k2));
            ++count;
        }
        CHECK(count == g.m());
    }
}

TEST_CASE("laplacian") {
    auto L = laplacian(fixtures::k4());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(L[static_cast<std::size_t>(i) * 4 + j] == (i == j ? 3.0 : -1.0));

    auto L2 = laplacian(fixtures::single_edge());
    CHECK(L2 == std::vector<double>{1.0, -1.0, -1.0, 1.0});

    Graph g = generate_u3r(12, 99);
    auto L3 = laplacian(g);
    double trace = 0.0;
    for (int i = 0; i < 12; ++i) {
        double row = 0.0;
        for (int j = 0; j < 12; ++j) row += L3[static_cast<std::size_t>(i) * 12 + j];
        CHECK(row == doctest::Approx(0.0));
        trace += L3[static_cast<std::size_t>(i) * 12 + i];
    }
    CHECK(trace == doctest::Approx(36.0));
}

TEST_CASE("exact_ratio") {
    CHECK(exact_ratio(4, 4) == doctest::Approx(1.0));
    CHECK(exact_ratio(878, 1000) == doctest::Approx(0.878));
    CHECK_THROWS_AS(exact_ratio(5, 4), std::logic_error);
    CHECK_THROWS_AS(exact_ratio(1, 0), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g = generate_u3r(10, 7);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph h = read_edge_list(in);
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());

    std::istringstream commented("# a comment\n4 2\n0 1\n# another\n2 3\n");
    Graph c = read_edge_list(commented);
    CHECK(c.n() == 4);
    CHECK(c.m() == 2);

    std::istringstream truncated("4 3\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), std::runtime_error);
    std::istringstream garbage("x y\n");
    CHECK_THROWS_AS(read_edge_list(garbage), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), std::runtime_error);
}
