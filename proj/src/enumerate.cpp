#include "skewopt/enumerate.hpp"

#include <map>
#include <string>

#include "skewopt/canonical.hpp"

namespace skewopt {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Gen {
    int k, n;
    EnumerateOptions opt;
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;
    std::uint64_t open = 0;  // touched vertices with deg < k
    int used = 1;
    std::uint64_t nodes = 0;
    std::map<std::string, UndirectedGraph> found;

    Gen(int k_, int n_, const EnumerateOptions& o)
        : k(k_), n(n_), opt(o), adj(n_, 0), deg(n_, 0), open(1) {}

    // Parity checks that fire when x reaches full degree. A pair of closed
    // vertices has its common neighborhood fixed; a closed-open pair is also
    // dead when no open neighbor of x could still join the open side.
    bool close_checks(int x) {
        if (!opt.even_neighborhood) return true;
        for (int u = 0; u < used; u++) {
            if (u == x) continue;
            int c = std::popcount(adj[u] & adj[x]);
            if (!(c & 1)) continue;
            if (deg[u] == k) return false;
            if ((adj[x] & open & ~adj[u] & ~bit(u)) == 0) return false;
        }
        return true;
    }

    bool clique_ok(int v, int w) {
        if (!opt.clique_level) return true;
        std::uint64_t common = adj[v] & adj[w];
        if (*opt.clique_level == CliqueLevel::TriangleFree) return common == 0;
        if (*opt.clique_level == CliqueLevel::HasK3NoK4) {
            std::uint64_t rest = common;
            while (rest) {
                int x = std::countr_zero(rest);
                rest &= rest - 1;
                if (adj[x] & common) return false;  // edge closes a K4
            }
        }
        return true;
    }

    bool feasible() {
        int fresh = n - used;
        int total_deficit = 0;
        std::uint64_t rest = open;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            int need = k - deg[u];
            total_deficit += need;
            if (need > fresh + std::popcount(open & ~adj[u] & ~bit(u))) return false;
        }
        return (total_deficit + fresh * k) % 2 == 0;
    }

    void emit() {
        UndirectedGraph g{n, adj};
        if (opt.connected && !is_connected(g)) return;
        if (opt.even_neighborhood && !even_neighborhood_check(g).empty()) return;
        if (opt.clique_level && classify_clique_level(g) != *opt.clique_level) return;
        CanonicalForm cf = canonical_form(g);
        found.emplace(cf.certificate, relabel(g, cf.labeling));
    }

    void complete_next() {
        int v = -1;
        for (int i = 0; i < n; i++)
            if (deg[i] < k) {
                v = i;
                break;
            }
        if (v < 0) {
            emit();
            return;
        }
        if (v >= used) {
            // All touched vertices are complete; v starts a new component.
            if (opt.connected) return;
            int saved = used;
            used = v + 1;
            open |= bit(v);
            extend(v, v + 1);
            open &= ~bit(v);
            used = saved;
            return;
        }
        extend(v, v + 1);
    }

    // Adds the next neighbor of v (ascending; everything below v is already
    // complete). Only the lowest untouched vertex is offered as a fresh
    // candidate: untouched vertices are interchangeable.
    void extend(int v, int from) {
        if (opt.max_nodes && ++nodes > opt.max_nodes)
            throw LimitExceeded("enumeration aborted after " + std::to_string(opt.max_nodes) +
                                " nodes");
        if (deg[v] == k) {
            if (close_checks(v)) complete_next();
            return;
        }
        // Candidates left for v: open touched vertices >= from plus every
        // fresh slot (fresh vertices come online one at a time).
        std::uint64_t cand = from < 64 ? open & ~adj[v] & ~bit(v) & ~(bit(from) - 1) : 0;
        if (k - deg[v] > n - used + std::popcount(cand)) return;

        for (int w = from; w < n; w++) {
            bool fresh = w >= used;
            if (fresh && w > used) break;
            if (!fresh && (deg[w] >= k || (adj[v] >> w & 1))) continue;
            if (!clique_ok(v, w)) {
                if (fresh) break;
                continue;
            }

            adj[v] |= bit(w);
            adj[w] |= bit(v);
            deg[v]++;
            deg[w]++;
            if (fresh) {
                used++;
                open |= bit(w);
            }
            if (deg[w] == k) open &= ~bit(w);
            bool vb_closed = deg[v] == k;
            if (vb_closed) open &= ~bit(v);

            bool ok = feasible();
            if (ok && deg[w] == k) ok = close_checks(w);
            if (ok) extend(v, w + 1);

            if (vb_closed) open |= bit(v);
            if (deg[w] == k) open |= bit(w);
            if (fresh) {
                used--;
                open &= ~bit(w);
            }
            deg[v]--;
            deg[w]--;
            adj[v] &= ~bit(w);
            adj[w] &= ~bit(v);
        }
    }
};

}  // namespace

std::vector<UndirectedGraph> enumerate_regular(int k, int n, const EnumerateOptions& options) {
    if (k < 0 || n < 1 || n > kMaxVertices) throw Error("enumerate: bad parameters");
    if (k >= n || (static_cast<long>(k) * n) % 2 != 0) return {};
    if (!options.force && n > enumeration_bound(k))
        throw Error("enumerate: n=" + std::to_string(n) + " beyond the measured bound " +
                    std::to_string(enumeration_bound(k)) + " for k=" + std::to_string(k) +
                    " (use force to override)");

    Gen gen(k, n, options);
    gen.complete_next();

    std::vector<UndirectedGraph> out;
    for (auto& [cert, g] : gen.found) out.push_back(std::move(g));
    return out;
}

int enumeration_bound(int k) {
    // Measured on the shipped prunes; see README.
    switch (k) {
        case 0: return 1;
        case 1: return 16;
        case 2: return 24;
        case 3: return 18;
        case 4: return 16;
        case 5: return 14;
        default: return 10;
    }
}

}  // namespace skewopt
