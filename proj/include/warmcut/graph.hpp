#ifndef WARMCUT_GRAPH_HPP
#define WARMCUT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace warmcut {

using Assignment = std::vector<std::uint8_t>;  // per-vertex bit, 0 <-> +1 <-> |0>

using Edge = std::pair<int, int>;  // stored with smaller endpoint first

/*
 * Simple undirected graph with 0-based contiguous vertex labels.
 *
 * The container itself accepts any simple graph so that solver unit tests can
 * use tiny irregular instances; 3-regularity is validated by the operations
 * that rely on it (classify_edge, the analytic engine, generate_u3r output).
 * Immutable after construction.
 */
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool is_cubic() const;
    bool is_regular(int degree) const;

private:
    int n_;
    std::vector<Edge> edges_;                 // sorted, canonical (u < v)
    std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

/*
 * Local structure of one edge (j,k) of a cubic graph: j1,j2 are the other two
 * neighbors of j and k1,k2 those of k. The subgraph class counts shared
 * neighbors: A none, B exactly one, C both. For class B the shared vertex is
 * normalized into the j1 == k1 slots; for class C, j1 == k1 and j2 == k2.
 */
struct EdgeNeighborhood {
    int j, k;
    int j1, j2;
    int k1, k2;
    enum class Class { A, B, C } cls;
};

// Random simple 3-regular graph via the configuration model: 3 stubs per
// vertex, seeded shuffle, consecutive pairing, whole-sample rejection of
// self-loops and duplicate edges. Deterministic for a fixed seed.
Graph generate_u3r(int n, std::uint64_t seed);

// Number of edges whose endpoints carry differing bits.
int cut_value(const Graph& g, const Assignment& a);

EdgeNeighborhood classify_edge(const Graph& g, const Edge& e);

// L = Diag(degrees) - A, dense row-major n*n.
std::vector<double> laplacian(const Graph& g);

// cut / exact as a real; rejects cut > exact (a broken solver or oracle).
double exact_ratio(int cut, int exact);

// Edge-list text format: first line "n m", then m lines "u v" with 0 <= u < v,
// '#' starts a comment line. The writer emits sorted canonical edges.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace warmcut

#endif  // WARMCUT_GRAPH_HPP
