#include "skewopt/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "skewopt/formats.hpp"

namespace skewopt {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by the vector of neighbor counts
// into all cells, repeating until stable. Splitting is deterministic: the
// first splittable cell (in order) is replaced by its groups in ascending
// key order.
void refine(const UndirectedGraph& g, Cells& cells) {
    for (;;) {
        std::vector<std::uint64_t> mask(cells.size(), 0);
        for (size_t ci = 0; ci < cells.size(); ci++)
            for (int v : cells[ci]) mask[ci] |= std::uint64_t{1} << v;

        bool split = false;
        for (size_t ci = 0; ci < cells.size() && !split; ci++) {
            if (cells[ci].size() <= 1) continue;
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cells[ci].size());
            for (int v : cells[ci]) {
                std::vector<int> key(cells.size());
                for (size_t cj = 0; cj < cells.size(); cj++)
                    key[cj] = std::popcount(g.adj[v] & mask[cj]);
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            if (keyed.front().first == keyed.back().first) continue;

            Cells groups;
            for (size_t i = 0; i < keyed.size(); i++) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.push_back({});
                groups.back().push_back(keyed[i].second);
            }
            Cells next;
            next.reserve(cells.size() + groups.size() - 1);
            for (size_t cj = 0; cj < cells.size(); cj++) {
                if (cj == ci)
                    for (auto& grp : groups) next.push_back(std::move(grp));
                else
                    next.push_back(std::move(cells[cj]));
            }
            cells = std::move(next);
            split = true;
        }
        if (!split) return;
    }
}

struct Ctx {
    const UndirectedGraph& g;
    bool have_best = false;
    std::string best;
    std::vector<int> best_labeling;
    std::vector<std::vector<int>> autos;  // discovered automorphisms, old -> old
};

std::vector<int> labeling_of(const Cells& cells, int n) {
    std::vector<int> lab(n);
    int pos = 0;
    for (const auto& cell : cells) lab[cell[0]] = pos++;
    return lab;
}

int uf_find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

void descend(Ctx& ctx, Cells cells, std::vector<int>& path) {
    refine(ctx.g, cells);

    bool discrete = true;
    size_t target = 0;
    size_t target_size = static_cast<size_t>(ctx.g.n) + 1;
    for (size_t ci = 0; ci < cells.size(); ci++)
        if (cells[ci].size() > 1) {
            discrete = false;
            if (cells[ci].size() < target_size) {
                target_size = cells[ci].size();
                target = ci;
            }
        }

    if (discrete) {
        std::vector<int> lab = labeling_of(cells, ctx.g.n);
        std::string cert = to_graph6(relabel(ctx.g, lab));
        if (!ctx.have_best || cert < ctx.best) {
            ctx.have_best = true;
            ctx.best = cert;
            ctx.best_labeling = lab;
        } else if (cert == ctx.best) {
            // Two labelings with equal certificates compose to an
            // automorphism; keep it for orbit pruning.
            std::vector<int> inv_best(ctx.g.n);
            for (int v = 0; v < ctx.g.n; v++) inv_best[ctx.best_labeling[v]] = v;
            std::vector<int> pi(ctx.g.n);
            for (int v = 0; v < ctx.g.n; v++) pi[v] = inv_best[lab[v]];
            if (ctx.autos.size() < 512) ctx.autos.push_back(std::move(pi));
        }
        return;
    }

    // Orbits under the automorphisms that fix the individualized path
    // pointwise; one branch per orbit is enough.
    std::vector<int> parent(ctx.g.n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& pi : ctx.autos) {
        bool fixes = true;
        for (int p : path)
            if (pi[p] != p) {
                fixes = false;
                break;
            }
        if (!fixes) continue;
        for (int v = 0; v < ctx.g.n; v++) {
            int a = uf_find(parent, v), b = uf_find(parent, pi[v]);
            if (a != b) parent[a] = b;
        }
    }

    std::uint64_t tried = 0;
    for (int v : cells[target]) {
        int root = uf_find(parent, v);
        if ((tried >> root) & 1) continue;
        tried |= std::uint64_t{1} << root;

        Cells child;
        child.reserve(cells.size() + 1);
        for (size_t ci = 0; ci < cells.size(); ci++) {
            if (ci == target) {
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[ci])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            } else {
                child.push_back(cells[ci]);
            }
        }
        path.push_back(v);
        descend(ctx, std::move(child), path);
        path.pop_back();
    }
}

}  // namespace

CanonicalForm canonical_form(const UndirectedGraph& g) {
    Ctx ctx{g};
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> path;
    descend(ctx, {all}, path);
    return {ctx.best_labeling, ctx.best};
}

bool isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; v++) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; v++) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace skewopt
