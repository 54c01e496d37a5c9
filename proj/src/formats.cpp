#include "skewopt/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skewopt {

namespace {

// Whitespace-separated integer scanner tracking 1-based line/column for
// diagnostics.
struct Scanner {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;
    int token_line = 1;  // start of the token next_int last consumed
    int token_col = 1;

    void advance() {
        if (text[pos] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        pos++;
    }

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r'))
            advance();
    }

    bool at_end() {
        skip_space();
        return pos == text.size();
    }

    long next_int(const char* what) {
        skip_space();
        if (pos == text.size()) throw ParseError(line, col, std::string("expected ") + what);
        int l = token_line = line, c = token_col = col;
        bool neg = false;
        if (text[pos] == '-' || text[pos] == '+') {
            neg = text[pos] == '-';
            advance();
        }
        if (pos == text.size() || text[pos] < '0' || text[pos] > '9')
            throw ParseError(l, c, std::string("expected ") + what);
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError(l, c, std::string(what) + " out of range");
            advance();
        }
        return neg ? -v : v;
    }
};

}  // namespace

std::string to_graph6(const UndirectedGraph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; j++)
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

UndirectedGraph from_graph6(std::string_view text) {
    // Tolerate the optional format header and one trailing newline.
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError(1, 1, "empty graph6 input");

    size_t pos = 0;
    auto byte = [&](const char* what) -> int {
        if (pos >= text.size())
            throw ParseError(1, static_cast<int>(pos) + 1, std::string("truncated graph6: ") + what);
        unsigned char c = text[pos++];
        if (c < 63 || c > 126)
            throw ParseError(1, static_cast<int>(pos), "byte outside graph6 range 63..126");
        return c - 63;
    };

    long n;
    int first = byte("order");
    if (first < 63) {
        n = first;
    } else {
        long a = byte("order"), b = byte("order"), c = byte("order");
        n = (a << 12) | (b << 6) | c;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError(1, 1,
                         "graph order " + std::to_string(n) + " outside supported 1.." +
                             std::to_string(kMaxVertices));

    std::vector<Edge> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++) {
            if (nbits == 0) {
                acc = byte("adjacency bits");
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.push_back({i, j});
            nbits--;
        }
    if (pos != text.size())
        throw ParseError(1, static_cast<int>(pos) + 1, "trailing bytes after graph6 data");
    return build_graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.n << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

UndirectedGraph from_edge_list(std::string_view text) {
    Scanner sc{text};
    long n = sc.next_int("vertex count");
    long m = sc.next_int("edge count");
    if (n < 1 || n > kMaxVertices) throw ParseError(1, 1, "vertex count out of range");
    if (m < 0) throw ParseError(1, 1, "negative edge count");
    std::vector<Edge> edges;
    for (long i = 0; i < m; i++) {
        long u = sc.next_int("edge endpoint");
        int l = sc.token_line, c = sc.token_col;
        long v = sc.next_int("edge endpoint");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(l, c, "edge endpoint outside 1.." + std::to_string(n));
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
    }
    if (!sc.at_end()) throw ParseError(sc.line, sc.col, "trailing content after edge list");
    try {
        return build_graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string to_sgf(const Orientation& o) {
    std::ostringstream out;
    out << o.graph.n << ' ' << o.edges.size() << ' ' << o.graph.max_degree() << '\n';
    for (size_t i = 0; i < o.edges.size(); i++)
        out << o.edges[i].u + 1 << ' ' << o.edges[i].v + 1 << ' ' << o.sign[i] << '\n';
    return out.str();
}

Orientation from_sgf(std::string_view text) {
    Scanner sc{text};
    long n = sc.next_int("vertex count");
    long m = sc.next_int("edge count");
    sc.next_int("degree");
    if (n < 1 || n > kMaxVertices) throw ParseError(1, 1, "vertex count out of range");
    std::vector<Edge> edges;
    std::vector<int> sgn;
    for (long i = 0; i < m; i++) {
        long u = sc.next_int("edge endpoint");
        int l = sc.token_line, c = sc.token_col;
        long v = sc.next_int("edge endpoint");
        long s = sc.next_int("sign");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(l, c, "edge endpoint outside 1.." + std::to_string(n));
        if (u == v) throw ParseError(l, c, "self-loop");
        if (s != 1 && s != -1) throw ParseError(l, c, "sign must be +1 or -1");
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (a > b) {
            std::swap(a, b);
            s = -s;
        }
        edges.push_back({a, b});
        sgn.push_back(static_cast<int>(s));
    }
    if (!sc.at_end()) throw ParseError(sc.line, sc.col, "trailing content after signed edges");

    UndirectedGraph g;
    try {
        g = build_graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
    // Signs arrive in input order; rebuild against the sorted edge list.
    auto sorted = g.edges();
    std::vector<int> signs(sorted.size());
    std::vector<char> filled(sorted.size(), 0);
    for (size_t i = 0; i < edges.size(); i++) {
        size_t at = std::lower_bound(sorted.begin(), sorted.end(), edges[i]) - sorted.begin();
        signs[at] = sgn[i];
        filled[at] = 1;
    }
    for (char f : filled)
        if (!f) throw ParseError(1, 1, "internal: unsigned edge");
    return make_orientation(g, signs);
}

int sgf_header_k(std::string_view text) {
    Scanner sc{text};
    sc.next_int("vertex count");
    sc.next_int("edge count");
    return static_cast<int>(sc.next_int("degree"));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
}

UndirectedGraph read_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.ends_with(".g6") || path.ends_with(".graph6")) return from_graph6(text);
    if (path.ends_with(".edges") || path.ends_with(".el")) return from_edge_list(text);
    if (path.ends_with(".sgf")) return from_sgf(text).graph;
    throw Error("unrecognized graph file extension: " + path);
}

Orientation read_sgf_file(const std::string& path) { return from_sgf(read_text_file(path)); }

}  // namespace skewopt
