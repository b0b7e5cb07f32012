#include "warmcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace warmcut {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw std::invalid_argument("Graph: vertex count must be positive.");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected.");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range.");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge rejected.");
    adjacency_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range.");
    return adjacency_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::is_cubic() const { return is_regular(3); }

bool Graph::is_regular(int degree) const {
    for (const auto& nbrs : adjacency_)
        if (static_cast<int>(nbrs.size()) != degree) return false;
    return true;
}

Graph generate_u3r(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("generate_u3r: n must be even and at least 4.");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(3 * static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 3; ++s) stubs[3 * static_cast<std::size_t>(v) + s] = v;

    constexpr int max_attempts = 100000;  // success probability ~ e^-2 per attempt
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph(n, std::move(edges));
    }
    throw std::runtime_error("generate_u3r: rejection sampling did not terminate.");
}

int cut_value(const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.size()) != g.n())
        throw std::invalid_argument("cut_value: assignment length mismatch.");
    int cut = 0;
    for (const auto& [u, v] : g.edges())
        if (a[u] != a[v]) ++cut;
    return cut;
}

EdgeNeighborhood classify_edge(const Graph& g, const Edge& e) {
    auto [j, k] = e;
    if (!g.has_edge(j, k)) throw std::invalid_argument("classify_edge: edge not in graph.");
    if (g.degree(j) != 3 || g.degree(k) != 3)
        throw std::invalid_argument("classify_edge: endpoints must have degree 3.");

    std::array<int, 2> js{}, ks{};
    int idx = 0;
    for (int v : g.neighbors(j))
        if (v != k) js[idx++] = v;
    idx = 0;
    for (int v : g.neighbors(k))
        if (v != j) ks[idx++] = v;

    std::vector<int> shared;
    for (int a : js)
        for (int b : ks)
            if (a == b) shared.push_back(a);

    EdgeNeighborhood nb{j, k, js[0], js[1], ks[0], ks[1], EdgeNeighborhood::Class::A};
    if (shared.size() == 1) {
        nb.cls = EdgeNeighborhood::Class::B;
        int s = shared[0];
        nb.j1 = s;
        nb.j2 = (js[0] == s) ? js[1] : js[0];
        nb.k1 = s;
        nb.k2 = (ks[0] == s) ? ks[1] : ks[0];
    } else if (shared.size() == 2) {
        nb.cls = EdgeNeighborhood::Class::C;
        nb.j1 = shared[0];
        nb.j2 = shared[1];
        nb.k1 = shared[0];
        nb.k2 = shared[1];
    }
    return nb;
}

std::vector<double> laplacian(const Graph& g) {
    const int n = g.n();
    std::vector<double> L(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        L[static_cast<std::size_t>(u) * n + v] = -1.0;
        L[static_cast<std::size_t>(v) * n + u] = -1.0;
        L[static_cast<std::size_t>(u) * n + u] += 1.0;
        L[static_cast<std::size_t>(v) * n + v] += 1.0;
    }
    return L;
}

double exact_ratio(int cut, int exact) {
    if (exact <= 0) throw std::invalid_argument("exact_ratio: exact optimum must be positive.");
    if (cut < 0) throw std::invalid_argument("exact_ratio: cut must be non-negative.");
    if (cut > exact)
        throw std::logic_error("exact_ratio: cut exceeds exact optimum (broken solver or oracle).");
    return static_cast<double>(cut) / static_cast<double>(exact);
}

namespace {

// Next non-comment, non-blank line, or false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw std::runtime_error("edge list: missing header line.");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw std::runtime_error("edge list: malformed header, expected 'n m'.");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::runtime_error("edge list: fewer edges than header declares.");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw std::runtime_error("edge list: malformed edge line.");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_edge_list(out, g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace warmcut
