#include "skewopt/search.hpp"

#include <algorithm>
#include <chrono>

namespace skewopt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Engine {
    const UndirectedGraph& g;
    int n, k, m;
    std::vector<Edge> edges;
    std::vector<int> eidx;        // (u, v) -> edge id
    std::vector<int> esign;       // 0 unset, otherwise S[u][v] for the edge's u < v
    std::vector<int> pair_sum;    // decided 2-path signed sum, pid = u * n + v
    std::vector<int> pair_undec;  // 2-paths with at least one unsigned edge
    std::vector<int> trail;
    std::vector<int> branch_edges;
    std::vector<std::pair<int, int>> queue;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    bool collect_all = false;
    std::vector<std::vector<int>> solutions;

    Engine(const UndirectedGraph& graph, int degree)
        : g(graph), n(graph.n), k(degree), m(graph.edge_count()) {
        edges = g.edges();
        eidx.assign(n * n, -1);
        for (int i = 0; i < m; i++) {
            eidx[edges[i].u * n + edges[i].v] = i;
            eidx[edges[i].v * n + edges[i].u] = i;
        }
        esign.assign(m, 0);
        pair_sum.assign(n * n, 0);
        pair_undec.assign(n * n, 0);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                pair_undec[u * n + v] = std::popcount(g.adj[u] & g.adj[v]);
    }

    int entry(int x, int y) const {
        int s = esign[eidx[x * n + y]];
        return x < y ? s : -s;
    }

    int pid(int x, int y) const { return x < y ? x * n + y : y * n + x; }

    // Queues the forced sign for every undecided 2-path of (u, v) that has
    // exactly one unsigned edge left. Caller guarantees |sum| == undec > 0,
    // so each remaining path must contribute -sign(sum).
    void queue_forcings(int u, int v) {
        int t = pair_sum[pid(u, v)] > 0 ? -1 : 1;
        std::uint64_t common = g.adj[u] & g.adj[v];
        while (common) {
            int w = std::countr_zero(common);
            common &= common - 1;
            int e1 = eidx[u * n + w], e2 = eidx[w * n + v];
            bool s1 = esign[e1] != 0, s2 = esign[e2] != 0;
            if (s1 == s2) continue;  // fully decided, or still two free edges
            if (s1) {
                int want = t * entry(u, w);  // forces entry(w, v)
                queue.emplace_back(e2, w < v ? want : -want);
            } else {
                int want = t * entry(w, v);  // forces entry(u, w)
                queue.emplace_back(e1, u < w ? want : -want);
            }
        }
    }

    // Folds in the 2-paths through pivot a that edge (a, b) just decided.
    // Returns false once some pair can no longer balance. The loop always
    // runs to completion even after a conflict: rewinding reverses whole
    // loops, so partial updates would corrupt the counters.
    bool update_pairs(int a, int b) {
        bool ok = true;
        std::uint64_t rest = g.adj[a] & ~bit(b);
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (esign[eidx[c * n + a]] == 0) continue;
            int p = pid(c, b);
            pair_sum[p] += entry(c, a) * entry(a, b);
            pair_undec[p]--;
            int abs_sum = std::abs(pair_sum[p]);
            if (abs_sum > pair_undec[p]) ok = false;
            if (ok && abs_sum && abs_sum == pair_undec[p])
                queue_forcings(std::min(c, b), std::max(c, b));
        }
        return ok;
    }

    void downdate_pairs(int a, int b) {
        std::uint64_t rest = g.adj[a] & ~bit(b);
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (esign[eidx[c * n + a]] == 0) continue;
            int p = pid(c, b);
            pair_sum[p] -= entry(c, a) * entry(a, b);
            pair_undec[p]++;
        }
    }

    // Assigns an edge sign and runs unit propagation to a fixpoint. On
    // conflict the caller rewinds the trail to its checkpoint; the trail and
    // counter updates reverse exactly because pops run in LIFO order.
    bool assign(int e0, int s0) {
        queue.clear();
        queue.emplace_back(e0, s0);
        for (size_t qi = 0; qi < queue.size(); qi++) {
            auto [e, s] = queue[qi];
            if (esign[e]) {
                if (esign[e] != s) return false;
                continue;
            }
            esign[e] = s;
            trail.push_back(e);
            bool ok = update_pairs(edges[e].u, edges[e].v);
            if (!update_pairs(edges[e].v, edges[e].u)) ok = false;
            if (!ok) return false;
        }
        return true;
    }

    void rewind(size_t mark) {
        while (trail.size() > mark) {
            int e = trail.back();
            trail.pop_back();
            downdate_pairs(edges[e].u, edges[e].v);
            downdate_pairs(edges[e].v, edges[e].u);
            esign[e] = 0;
        }
    }

    bool dfs(size_t next) {
        while (next < branch_edges.size() && esign[branch_edges[next]]) next++;
        if (next == branch_edges.size()) {
            solutions.push_back(esign);
            return !collect_all;
        }
        int e = branch_edges[next];
        for (int s : {1, -1}) {
            nodes++;
            if (max_nodes && nodes > max_nodes)
                throw LimitExceeded("search aborted after " + std::to_string(max_nodes) +
                                    " nodes");
            size_t mark = trail.size();
            if (assign(e, s) && dfs(next + 1)) return true;
            rewind(mark);
        }
        return false;
    }

    // Pins the BFS spanning tree (root 0, children in ascending index order)
    // parent -> child, selecting one representative per switching class, and
    // orders the remaining edges by (min endpoint depth, endpoints). Returns
    // false when tree propagation already refutes every class.
    bool setup_tree_and_run() {
        std::vector<int> depth(n, -1), order;
        std::vector<std::pair<int, int>> tree_arcs;
        depth[0] = 0;
        order.push_back(0);
        for (size_t qi = 0; qi < order.size(); qi++) {
            int p = order[qi];
            std::uint64_t rest = g.adj[p];
            while (rest) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                if (depth[c] >= 0) continue;
                depth[c] = depth[p] + 1;
                order.push_back(c);
                tree_arcs.emplace_back(p, c);
            }
        }
        std::vector<char> is_tree(m, 0);
        for (auto [p, c] : tree_arcs) is_tree[eidx[p * n + c]] = 1;
        for (int e = 0; e < m; e++)
            if (!is_tree[e]) branch_edges.push_back(e);
        std::stable_sort(branch_edges.begin(), branch_edges.end(), [&](int a, int b) {
            int da = std::min(depth[edges[a].u], depth[edges[a].v]);
            int db = std::min(depth[edges[b].u], depth[edges[b].v]);
            if (da != db) return da < db;
            return edges[a] < edges[b];
        });
        for (auto [p, c] : tree_arcs)
            if (!assign(eidx[p * n + c], p < c ? 1 : -1)) return false;
        dfs(0);
        return true;
    }
};

void check_preconditions(const UndirectedGraph& g, int k) {
    if (!is_connected(g)) throw Error("search needs a connected graph");
    if (!is_regular(g, k)) throw Error("search needs a " + std::to_string(k) + "-regular graph");
}

std::uint64_t switching_class_count(const UndirectedGraph& g) {
    int dim = g.edge_count() - g.n + 1;
    if (dim > 63) throw Error("switching class count overflows 64 bits");
    return std::uint64_t{1} << dim;
}

}  // namespace

SearchCertificate find_optimum_orientation(const UndirectedGraph& g, int k,
                                           const SearchOptions& options) {
    auto t0 = Clock::now();
    check_preconditions(g, k);

    SearchCertificate cert;
    if (!even_neighborhood_check(g).empty()) {
        // A pair with an odd common neighborhood can never balance, whatever
        // the signs; every switching class is refuted at once.
        cert.classes_covered = switching_class_count(g);
        cert.wall_time = seconds_since(t0);
        return cert;
    }

    Engine eng(g, k);
    eng.max_nodes = options.max_nodes;
    eng.collect_all = options.collect_all;
    eng.setup_tree_and_run();

    cert.nodes_explored = eng.nodes;
    if (eng.solutions.empty()) {
        cert.outcome = SearchOutcome::None;
        cert.classes_covered = switching_class_count(g);
    } else {
        cert.outcome = SearchOutcome::Found;
        cert.witness = make_orientation(g, eng.solutions.front());
        if (!gram(*cert.witness, k).is_optimum)
            throw Error("internal: search witness failed independent gram verification");
    }
    cert.wall_time = seconds_since(t0);
    return cert;
}

std::vector<Orientation> all_optimum_orientations(const UndirectedGraph& g, int k,
                                                  std::uint64_t max_nodes) {
    check_preconditions(g, k);
    if (!even_neighborhood_check(g).empty()) return {};

    Engine eng(g, k);
    eng.max_nodes = max_nodes;
    eng.collect_all = true;
    eng.setup_tree_and_run();

    std::vector<Orientation> out;
    for (const auto& s : eng.solutions) {
        Orientation o = make_orientation(g, s);
        if (!gram(o, k).is_optimum)
            throw Error("internal: search witness failed independent gram verification");
        out.push_back(std::move(o));
    }
    return out;
}

SearchCertificate brute_force_search(const UndirectedGraph& g, int k) {
    auto t0 = Clock::now();
    check_preconditions(g, k);
    int n = g.n;
    int m = g.edge_count();
    if (m > 26) throw Error("brute force capped at 26 edges (got " + std::to_string(m) + ")");

    auto edges = g.edges();
    std::vector<int> eidx(n * n, -1);
    for (int i = 0; i < m; i++) {
        eidx[edges[i].u * n + edges[i].v] = i;
        eidx[edges[i].v * n + edges[i].u] = i;
    }
    struct Path {
        int e1, f1, e2, f2;
    };
    std::vector<std::vector<Path>> pair_paths;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) {
            std::uint64_t common = g.adj[u] & g.adj[v];
            if (!common) continue;
            std::vector<Path> paths;
            while (common) {
                int w = std::countr_zero(common);
                common &= common - 1;
                paths.push_back(
                    {eidx[u * n + w], u < w ? 1 : -1, eidx[w * n + v], w < v ? 1 : -1});
            }
            pair_paths.push_back(std::move(paths));
        }

    SearchCertificate cert;
    std::vector<int> sign(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask++) {
        cert.nodes_explored++;
        for (int i = 0; i < m; i++) sign[i] = (mask >> i) & 1 ? -1 : 1;
        bool balanced = true;
        for (const auto& paths : pair_paths) {
            int acc = 0;
            for (const Path& p : paths) acc += sign[p.e1] * p.f1 * sign[p.e2] * p.f2;
            if (acc != 0) {
                balanced = false;
                break;
            }
        }
        if (balanced) {
            cert.outcome = SearchOutcome::Found;
            cert.witness = make_orientation(g, sign);
            if (!gram(*cert.witness, k).is_optimum)
                throw Error("internal: brute-force witness failed gram verification");
            cert.wall_time = seconds_since(t0);
            return cert;
        }
    }
    cert.outcome = SearchOutcome::None;
    cert.classes_covered = switching_class_count(g);
    cert.wall_time = seconds_since(t0);
    return cert;
}

}  // namespace skewopt
