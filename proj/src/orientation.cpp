#include "skewopt/orientation.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace skewopt {

namespace {

void index_edges(Orientation& o) {
    int n = o.graph.n;
    o.edge_index.assign(n * n, -1);
    for (size_t i = 0; i < o.edges.size(); i++) {
        const Edge& e = o.edges[i];
        o.edge_index[e.u * n + e.v] = static_cast<int>(i);
        o.edge_index[e.v * n + e.u] = static_cast<int>(i);
    }
}

}  // namespace

Orientation make_orientation(const UndirectedGraph& g, const std::vector<int>& signs) {
    Orientation o;
    o.graph = g;
    o.edges = g.edges();
    if (signs.size() != o.edges.size())
        throw Error("orientation needs one sign per edge (" + std::to_string(o.edges.size()) +
                    " edges, " + std::to_string(signs.size()) + " signs)");
    for (int s : signs)
        if (s != 1 && s != -1) throw Error("edge sign must be +1 or -1");
    o.sign = signs;
    index_edges(o);
    return o;
}

Orientation orient_forward(const UndirectedGraph& g) {
    return make_orientation(g, std::vector<int>(g.edges().size(), 1));
}

Orientation orientation_from_matrix(const IntMat& s) {
    if (!s.is_square()) throw Error("skew matrix must be square");
    int n = s.rows;
    std::vector<Edge> edges;
    std::vector<int> signs;
    for (int i = 0; i < n; i++) {
        if (s.at(i, i) != 0) throw Error("skew matrix has nonzero diagonal");
        for (int j = i + 1; j < n; j++) {
            int v = s.at(i, j);
            if (v != s.at(j, i) * -1) throw Error("matrix is not skew-symmetric");
            if (v == 0) continue;
            if (v != 1 && v != -1) throw Error("skew matrix entries must lie in {0, +1, -1}");
            edges.push_back({i, j});
            signs.push_back(v);
        }
    }
    return make_orientation(build_graph(n, edges), signs);
}

IntMat skew_matrix(const Orientation& o) {
    int n = o.graph.n;
    IntMat s(n, n);
    for (size_t i = 0; i < o.edges.size(); i++) {
        const Edge& e = o.edges[i];
        s.at(e.u, e.v) = o.sign[i];
        s.at(e.v, e.u) = -o.sign[i];
    }
    return s;
}

GramReport gram(const Orientation& o, int k) {
    int n = o.graph.n;
    IntMat s = skew_matrix(o);
    IntMat g(n, n);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            int acc = 0;
            for (int l = 0; l < n; l++) acc += s.at(l, i) * s.at(l, j);
            g.at(i, j) = acc;
            g.at(j, i) = acc;
        }
    GramReport rep;
    rep.gram = g;
    rep.target_k = k;
    rep.is_optimum = true;
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            if (i == j) {
                if (g.at(i, i) != k) rep.is_optimum = false;
            } else if (g.at(i, j) != 0) {
                rep.is_optimum = false;
                rep.off_diagonal_violations.push_back({i, j, g.at(i, j)});
            }
        }
    return rep;
}

double skew_energy(const Orientation& o) {
    int n = o.graph.n;
    IntMat s = skew_matrix(o);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            double acc = 0;
            for (int l = 0; l < n; l++) acc += s.at(l, i) * s.at(l, j);
            m(i, j) = acc;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    // Eigenvalues of the integer matrix S^T S that come out below the noise
    // floor are exact zeros; without the cutoff, sqrt turns O(eps) jitter
    // into O(sqrt(eps)) energy error.
    double lmax = std::max(0.0, es.eigenvalues().maxCoeff());
    double cutoff = 1e-10 * std::max(1.0, lmax);
    double total = 0;
    for (int i = 0; i < n; i++) {
        double ev = es.eigenvalues()[i];
        if (ev > cutoff) total += std::sqrt(ev);
    }
    return total;
}

int two_walk_balance(const Orientation& o, int u, int v) {
    if (u == v) throw Error("two_walk_balance needs distinct vertices");
    std::uint64_t common = o.graph.adj[u] & o.graph.adj[v];
    int acc = 0;
    while (common) {
        int w = std::countr_zero(common);
        common &= common - 1;
        acc += o.entry(u, w) * o.entry(w, v);
    }
    return acc;
}

Orientation reverse_at(const Orientation& o, int v) {
    if (v < 0 || v >= o.graph.n) throw Error("reverse_at: vertex out of range");
    std::vector<int> signs = o.sign;
    for (size_t i = 0; i < o.edges.size(); i++)
        if (o.edges[i].u == v || o.edges[i].v == v) signs[i] = -signs[i];
    return make_orientation(o.graph, signs);
}

Orientation normalize_switching(const Orientation& o) {
    const UndirectedGraph& g = o.graph;
    if (!is_connected(g)) throw Error("normalize_switching needs a connected graph");

    // flip[v] == 1 means v takes part in the switch. BFS from 0, neighbors in
    // ascending order; each tree arc must come out parent -> child.
    std::vector<int> flip(g.n, 0), seen(g.n, 0), queue;
    queue.push_back(0);
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); qi++) {
        int p = queue[qi];
        std::uint64_t rest = g.adj[p];
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (seen[c]) continue;
            seen[c] = 1;
            int cur = o.entry(p, c) * (flip[p] ? -1 : 1);
            flip[c] = cur == 1 ? 0 : 1;
            queue.push_back(c);
        }
    }

    std::vector<int> signs = o.sign;
    for (size_t i = 0; i < o.edges.size(); i++)
        if (flip[o.edges[i].u] ^ flip[o.edges[i].v]) signs[i] = -signs[i];
    return make_orientation(g, signs);
}

Orientation disjoint_union(const Orientation& o1, const Orientation& o2) {
    UndirectedGraph g = disjoint_union(o1.graph, o2.graph);
    std::vector<int> signs = o1.sign;
    signs.insert(signs.end(), o2.sign.begin(), o2.sign.end());
    // disjoint_union keeps each component's edges contiguous and sorted, with
    // o1's block first, so the concatenated sign vector lines up.
    return make_orientation(g, signs);
}

}  // namespace skewopt
