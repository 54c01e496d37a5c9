#pragma once

// Test-only utilities: a compact SHA-256, seeded random graph/orientation
// generators, and naive oracles kept independent of the library's search and
// enumeration code paths.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "skewopt/canonical.hpp"
#include "skewopt/graph.hpp"
#include "skewopt/orientation.hpp"

namespace testutil {

// ---- SHA-256 ---------------------------------------------------------------

inline std::string sha256_hex(const std::string& data) {
    static const std::uint32_t K[64] = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
        0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
        0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
        0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
        0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
        0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
        0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
        0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
        0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
        0xc67178f2};
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

    std::vector<std::uint8_t> msg(data.begin(), data.end());
    std::uint64_t bitlen = static_cast<std::uint64_t>(msg.size()) * 8;
    msg.push_back(0x80);
    while (msg.size() % 64 != 56) msg.push_back(0);
    for (int i = 7; i >= 0; i--) msg.push_back(static_cast<std::uint8_t>(bitlen >> (8 * i)));

    auto rotr = [](std::uint32_t x, int s) { return (x >> s) | (x << (32 - s)); };
    for (size_t off = 0; off < msg.size(); off += 64) {
        std::uint32_t w[64];
        for (int i = 0; i < 16; i++)
            w[i] = (msg[off + 4 * i] << 24) | (msg[off + 4 * i + 1] << 16) |
                   (msg[off + 4 * i + 2] << 8) | msg[off + 4 * i + 3];
        for (int i = 16; i < 64; i++) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6],
                      hh = h[7];
        for (int i = 0; i < 64; i++) {
            std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = S0 + maj;
            hh = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
        h[5] += f;
        h[6] += g;
        h[7] += hh;
    }
    static const char* hexd = "0123456789abcdef";
    std::string out;
    for (std::uint32_t v : h)
        for (int i = 7; i >= 0; i--) out.push_back(hexd[(v >> (4 * i)) & 0xF]);
    return out;
}

// ---- random generators -----------------------------------------------------

inline skewopt::UndirectedGraph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<skewopt::Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (coin(rng) < p) edges.push_back({u, v});
    return skewopt::build_graph(n, edges);
}

inline skewopt::Orientation random_orientation(std::mt19937& rng,
                                               const skewopt::UndirectedGraph& g) {
    std::vector<int> signs(g.edges().size());
    for (auto& s : signs) s = rng() & 1 ? 1 : -1;
    return skewopt::make_orientation(g, signs);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// ---- naive regular-graph oracle ---------------------------------------------

// Generates every k-regular graph on n vertices up to isomorphism by
// completing the smallest deficient vertex with ascending neighbors, with the
// single standard symmetry rule that untouched vertices are interchangeable.
// No parity pruning; the only lookahead is the trivial partner count, so the
// machinery under test stays uninvolved. Dedup by canonical form.
struct NaiveRegularGen {
    int k, n;
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;
    int used = 1;
    std::set<std::string> certs;
    std::vector<skewopt::UndirectedGraph> graphs;

    NaiveRegularGen(int k_, int n_) : k(k_), n(n_), adj(n_, 0), deg(n_, 0) {}

    void run() { step(); }

    void step() {
        int v = -1;
        for (int i = 0; i < n; i++)
            if (deg[i] < k) {
                v = i;
                break;
            }
        if (v < 0) {
            skewopt::UndirectedGraph g{n, adj};
            auto cf = skewopt::canonical_form(g);
            if (certs.insert(cf.certificate).second) graphs.push_back(relabel(g, cf.labeling));
            return;
        }
        if (v >= used) {
            int saved = used;  // new component; restore on the way out
            used = v + 1;
            grow(v, v + 1);
            used = saved;
            return;
        }
        grow(v, v + 1);
    }

    void grow(int v, int from) {
        if (deg[v] == k) {
            step();
            return;
        }
        int partners = n - used;
        for (int w = from; w < used; w++)
            if (deg[w] < k && !((adj[v] >> w) & 1)) partners++;
        if (k - deg[v] > partners) return;

        for (int w = from; w < n; w++) {
            if (w > used) break;  // untouched vertices are interchangeable
            if (w < used && (deg[w] >= k || ((adj[v] >> w) & 1))) continue;
            bool fresh = w == used;
            adj[v] |= std::uint64_t{1} << w;
            adj[w] |= std::uint64_t{1} << v;
            deg[v]++;
            deg[w]++;
            if (fresh) used++;
            grow(v, w + 1);
            if (fresh) used--;
            deg[v]--;
            deg[w]--;
            adj[v] &= ~(std::uint64_t{1} << w);
            adj[w] &= ~(std::uint64_t{1} << v);
        }
    }
};

inline std::vector<skewopt::UndirectedGraph> naive_regular_graphs(int k, int n, bool connected,
                                                                  bool even_neighborhood) {
    NaiveRegularGen gen(k, n);
    gen.run();
    std::vector<skewopt::UndirectedGraph> out;
    for (auto& g : gen.graphs) {
        if (connected && !skewopt::is_connected(g)) continue;
        if (even_neighborhood && !skewopt::even_neighborhood_check(g).empty()) continue;
        out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return skewopt::canonical_form(a).certificate < skewopt::canonical_form(b).certificate;
    });
    return out;
}

// Exhaustive isomorphism test by trying all n! bijections; only for n <= 8.
inline bool isomorphic_by_permutations(const skewopt::UndirectedGraph& a,
                                       const skewopt::UndirectedGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.n && match; u++)
            for (int v = u + 1; v < a.n && match; v++)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline skewopt::UndirectedGraph octahedron() {
    // K_{2,2,2}: three antipodal pairs (0,3), (1,4), (2,5).
    std::vector<skewopt::Edge> edges;
    for (int u = 0; u < 6; u++)
        for (int v = u + 1; v < 6; v++)
            if (v - u != 3) edges.push_back({u, v});
    return skewopt::build_graph(6, edges);
}

}  // namespace testutil
