#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "skewopt/error.hpp"

namespace skewopt {

// Adjacency is one 64-bit word per vertex; everything in this project is desk
// scale, so 64 vertices is plenty (largest built-in object is the 32-vertex
// hypercube lift).
inline constexpr int kMaxVertices = 64;

struct Edge {
    int u = 0;
    int v = 0;  // u < v after normalization
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct UndirectedGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; v++) s += degree(v);
        return s / 2;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; v++) d = d > degree(v) ? d : degree(v);
        return d;
    }

    // Sorted edge list, u < v.
    std::vector<Edge> edges() const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

// Pair of distinct vertices whose common neighborhood has odd size.
struct PairParityViolation {
    int u = 0;
    int v = 0;  // u < v
    int common = 0;
    friend bool operator==(const PairParityViolation&, const PairParityViolation&) = default;
};

enum class CliqueLevel { HasK4, HasK3NoK4, TriangleFree };

const char* to_string(CliqueLevel level);

UndirectedGraph build_graph(int n, const std::vector<Edge>& edges);

// All vertex pairs with an odd number of common neighbors, sorted by (u, v).
// Empty iff the graph has the even neighborhood property.
std::vector<PairParityViolation> even_neighborhood_check(const UndirectedGraph& g);

CliqueLevel classify_clique_level(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);
bool is_regular(const UndirectedGraph& g, int k);

// Vertices of g2 are shifted by g1.n.
UndirectedGraph disjoint_union(const UndirectedGraph& g1, const UndirectedGraph& g2);

// Vertex (i, j) of g1 x g2 is flattened as i * g2.n + j.
UndirectedGraph cartesian_product(const UndirectedGraph& g1, const UndirectedGraph& g2);

// Two n-cycles v_0..v_{n-1} and u_0..u_{n-1} (the u_i live at index n+i),
// joined by the edges v_i u_{i-1} and v_i u_{i+1} (indices mod n). 4-regular
// on 2n vertices.
UndirectedGraph u_graph(int n);

// Iterated prism over K2: dimension d gives the 2^d-vertex hypercube.
UndirectedGraph hypercube(int d);

UndirectedGraph complete_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n);

// labeling[old] = new index; labeling must be a permutation of 0..n-1.
UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<int>& labeling);

}  // namespace skewopt
