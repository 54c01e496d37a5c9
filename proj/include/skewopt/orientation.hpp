#pragma once

#include <optional>
#include <vector>

#include "skewopt/graph.hpp"
#include "skewopt/intmat.hpp"

namespace skewopt {

// An edge-sign assignment over an undirected graph. sign[i] is +1 when the
// arc runs edges[i].u -> edges[i].v, -1 the other way; equivalently S[u][v]
// for u < v. Immutable after construction.
struct Orientation {
    UndirectedGraph graph;
    std::vector<Edge> edges;  // sorted, u < v
    std::vector<int> sign;    // same length, entries +1 / -1

    // Skew-adjacency entry s_uv; 0 when uv is not an edge.
    int entry(int u, int v) const {
        if (!graph.has_edge(u, v)) return 0;
        int id = edge_index[u * graph.n + v];
        return u < v ? sign[id] : -sign[id];
    }

    std::vector<int> edge_index;  // (u, v) -> position in edges, -1 otherwise
};

Orientation make_orientation(const UndirectedGraph& g, const std::vector<int>& signs);

// All edges oriented low -> high. Handy as a deterministic starting point.
Orientation orient_forward(const UndirectedGraph& g);

// Builds the orientation whose skew matrix equals s. Validates that s is
// skew-symmetric with entries in {0, +1, -1}.
Orientation orientation_from_matrix(const IntMat& s);

IntMat skew_matrix(const Orientation& o);

struct GramViolation {
    int u = 0;
    int v = 0;  // u < v
    int value = 0;
    friend bool operator==(const GramViolation&, const GramViolation&) = default;
};

// Exact integer S^T S diagnosed against k I.
struct GramReport {
    IntMat gram;
    int target_k = 0;
    std::vector<GramViolation> off_diagonal_violations;
    bool is_optimum = false;
};

GramReport gram(const Orientation& o, int k);

// Sum of singular values of S, computed as sum of sqrt of the eigenvalues of
// the symmetric matrix S^T S. The only floating-point operation in the
// library.
double skew_energy(const Orientation& o);

// w+_uv(2) - w-_uv(2): the signed count of 2-walks from u to v, i.e. the
// (u, v) entry of S^2 and the negated off-diagonal gram entry.
int two_walk_balance(const Orientation& o, int u, int v);

// Flip every arc incident to v.
Orientation reverse_at(const Orientation& o, int v);

// Canonical representative of o's reversal closure: the unique switching
// image whose BFS-tree arcs (root 0, children in ascending index order) all
// run parent -> child. Requires a connected graph. The closure of a
// connected orientation has size 2^(n-1): flipping every vertex is the
// identity.
Orientation normalize_switching(const Orientation& o);

// Block-diagonal combination; vertices of o2 shift by o1.graph.n.
Orientation disjoint_union(const Orientation& o1, const Orientation& o2);

}  // namespace skewopt
