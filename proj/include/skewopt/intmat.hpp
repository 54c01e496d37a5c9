#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skewopt/error.hpp"

namespace skewopt {

// Dense integer matrix with exact arithmetic. Orders here are tiny (<= 64),
// so everything is plain O(n^3) over int.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    IntMat transpose() const {
        IntMat t(cols, rows);
        for (int i = 0; i < rows; i++)
            for (int j = 0; j < cols; j++) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_square() const { return rows == cols; }

    friend bool operator==(const IntMat&, const IntMat&) = default;
};

inline IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw Error("matrix product: shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; i++)
        for (int l = 0; l < x.cols; l++) {
            int xv = x.at(i, l);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; j++) z.at(i, j) += xv * y.at(l, j);
        }
    return z;
}

inline IntMat operator+(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix sum: shape mismatch");
    IntMat z = x;
    for (std::size_t i = 0; i < z.a.size(); i++) z.a[i] += y.a[i];
    return z;
}

inline IntMat operator-(const IntMat& x, const IntMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix difference: shape mismatch");
    IntMat z = x;
    for (std::size_t i = 0; i < z.a.size(); i++) z.a[i] -= y.a[i];
    return z;
}

inline IntMat operator*(int c, const IntMat& x) {
    IntMat z = x;
    for (int& v : z.a) v *= c;
    return z;
}

inline IntMat operator-(const IntMat& x) { return -1 * x; }

inline bool is_zero(const IntMat& m) {
    for (int v : m.a)
        if (v != 0) return false;
    return true;
}

// m == c * I, exactly.
inline bool is_scaled_identity(const IntMat& m, int c) {
    if (!m.is_square()) return false;
    return m == c * IntMat::identity(m.rows);
}

// Parses a whitespace-separated matrix, one row per line. Blank lines are
// skipped; all rows must have the same length.
IntMat parse_int_matrix(std::string_view text);

std::string to_string(const IntMat& m);

}  // namespace skewopt
