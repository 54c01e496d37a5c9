#include "skewopt/graph.hpp"

#include <string>

namespace skewopt {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n; u++) {
        std::uint64_t rest = adj[u] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

const char* to_string(CliqueLevel level) {
    switch (level) {
        case CliqueLevel::HasK4: return "has-k4";
        case CliqueLevel::HasK3NoK4: return "k3-no-k4";
        case CliqueLevel::TriangleFree: return "triangle-free";
    }
    return "?";
}

UndirectedGraph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 1 || n > kMaxVertices)
        throw Error("vertex count " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxVertices));
    UndirectedGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (const Edge& e : edges) {
        int u = e.u, v = e.v;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
    }
    return g;
}

std::vector<PairParityViolation> even_neighborhood_check(const UndirectedGraph& g) {
    std::vector<PairParityViolation> out;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++) {
            int c = std::popcount(g.adj[u] & g.adj[v]);
            if (c & 1) out.push_back({u, v, c});
        }
    return out;
}

CliqueLevel classify_clique_level(const UndirectedGraph& g) {
    bool triangle = false;
    for (int u = 0; u < g.n; u++) {
        std::uint64_t rest = g.adj[u] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t common = g.adj[u] & g.adj[v];
            if (!common) continue;
            triangle = true;
            std::uint64_t ws = common;
            while (ws) {
                int w = std::countr_zero(ws);
                ws &= ws - 1;
                if (common & g.adj[w]) return CliqueLevel::HasK4;
            }
        }
    }
    return triangle ? CliqueLevel::HasK3NoK4 : CliqueLevel::TriangleFree;
}

bool is_connected(const UndirectedGraph& g) {
    std::uint64_t seen = 1, todo = 1;
    while (todo) {
        int v = std::countr_zero(todo);
        todo &= todo - 1;
        std::uint64_t fresh = g.adj[v] & ~seen;
        seen |= fresh;
        todo |= fresh;
    }
    return std::popcount(seen) == g.n;
}

bool is_regular(const UndirectedGraph& g, int k) {
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != k) return false;
    return true;
}

UndirectedGraph disjoint_union(const UndirectedGraph& g1, const UndirectedGraph& g2) {
    if (g1.n + g2.n > kMaxVertices) throw Error("disjoint union exceeds vertex cap");
    UndirectedGraph g;
    g.n = g1.n + g2.n;
    g.adj.assign(g.n, 0);
    for (int v = 0; v < g1.n; v++) g.adj[v] = g1.adj[v];
    for (int v = 0; v < g2.n; v++) g.adj[g1.n + v] = g2.adj[v] << g1.n;
    return g;
}

UndirectedGraph cartesian_product(const UndirectedGraph& g1, const UndirectedGraph& g2) {
    if (g1.n * g2.n > kMaxVertices) throw Error("cartesian product exceeds vertex cap");
    std::vector<Edge> edges;
    auto id = [&](int i, int j) { return i * g2.n + j; };
    for (int i = 0; i < g1.n; i++)
        for (int j = 0; j < g2.n; j++) {
            for (int j2 = j + 1; j2 < g2.n; j2++)
                if (g2.has_edge(j, j2)) edges.push_back({id(i, j), id(i, j2)});
            for (int i2 = i + 1; i2 < g1.n; i2++)
                if (g1.has_edge(i, i2)) edges.push_back({id(i, j), id(i2, j)});
        }
    return build_graph(g1.n * g2.n, edges);
}

UndirectedGraph u_graph(int n) {
    if (n < 3) throw Error("u_graph needs cycle length >= 3");
    if (2 * n > kMaxVertices) throw Error("u_graph exceeds vertex cap");
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
    };
    for (int i = 0; i < n; i++) {
        add(i, (i + 1) % n);              // outer cycle
        add(n + i, n + (i + 1) % n);      // inner cycle
        add(i, n + (i + n - 1) % n);
        add(i, n + (i + 1) % n);
    }
    // build_graph rejects any collision, which keeps the construction honest
    // for every n >= 3.
    return build_graph(2 * n, edges);
}

UndirectedGraph hypercube(int d) {
    if (d < 1 || d > 6) throw Error("hypercube dimension outside 1..6");
    UndirectedGraph q = path_graph(2);
    for (int i = 1; i < d; i++) q = cartesian_product(path_graph(2), q);
    return q;
}

UndirectedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) edges.push_back({u, v});
    return build_graph(n, edges);
}

UndirectedGraph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs >= 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; v++) {
        int w = (v + 1) % n;
        edges.push_back({v < w ? v : w, v < w ? w : v});
    }
    return build_graph(n, edges);
}

UndirectedGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; v++) edges.push_back({v, v + 1});
    return build_graph(n, edges);
}

UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<int>& labeling) {
    if (static_cast<int>(labeling.size()) != g.n) throw Error("relabel: labeling size mismatch");
    UndirectedGraph h;
    h.n = g.n;
    h.adj.assign(g.n, 0);
    for (int u = 0; u < g.n; u++) {
        std::uint64_t rest = g.adj[u];
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            h.adj[labeling[u]] |= std::uint64_t{1} << labeling[v];
        }
    }
    return h;
}

}  // namespace skewopt
