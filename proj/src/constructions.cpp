#include "skewopt/constructions.hpp"

#include <array>

#include "skewopt/intmat.hpp"

namespace skewopt {

namespace {

// ---- fixed matrices ------------------------------------------------------

constexpr const char* kG4 = R"(
 0  1  1  1  0  0  1  1
-1  0  1 -1  0  0  1 -1
-1 -1  0  1 -1  1  0  0
-1  1 -1  0  1  1  0  0
 0  0  1 -1  0  1 -1  1
 0  0 -1 -1 -1  0  1  1
-1 -1  0  0  1 -1  0  1
-1  1  0  0 -1 -1 -1  0
)";

constexpr const char* kG16 = R"(
 0  1  0  0 -1 -1  1 -1  0  0  0  0
-1  0  1  0  0 -1  0  1 -1  0  0  0
 0 -1  0  1  0 -1  0  0  1 -1  0  0
 0  0 -1  0  1 -1  0  0  0  1 -1  0
 1  0  0 -1  0 -1 -1  0  0  0  1  0
 1  1  1  1  1  0  0  0  0  0  0  0
-1  0  0  0  1  0  0 -1  0  0  1 -1
 1 -1  0  0  0  0  1  0 -1  0  0 -1
 0  1 -1  0  0  0  0  1  0 -1  0 -1
 0  0  1 -1  0  0  0  0  1  0 -1 -1
 0  0  0  1 -1  0 -1  0  0  1  0 -1
 0  0  0  0  0  0  1  1  1  1  1  0
)";

constexpr const char* kG17 = R"(
 0  0  0  1 -1  0  0  0  0  1 -1  1
 0  0  0  1  0 -1  0  0  0 -1 -1 -1
 0  0  0  0  1  1  0  0  0 -1 -1  1
-1 -1  0  0  0  0  1 -1 -1  0  0  0
 1  0 -1  0  0  0 -1 -1 -1  0  0  0
 0  1 -1  0  0  0  1 -1  1  0  0  0
 0  0  0 -1  1 -1  0  0  0  1 -1  0
 0  0  0  1  1  1  0  0  0  1  0 -1
 0  0  0  1  1 -1  0  0  0  0  1  1
-1  1  1  0  0  0 -1 -1  0  0  0  0
 1  1  1  0  0  0  1  0 -1  0  0  0
-1  1 -1  0  0  0  0  1 -1  0  0  0
)";

constexpr const char* kG31 = R"(
 0  1  1  1  1  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0 -1  1  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  1  0  0  0 -1 -1  1  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0 -1  0  0  1  0  0  1 -1  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0  0 -1  0  0  1  0 -1  0  1  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0  0  0  1  0  0 -1  0  1 -1  0  0  0  0  0  0  0  0
 0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  1 -1 -1  0  0  0  0  0
 0 -1  0  1  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0 -1 -1  0  0  0
 0 -1  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  1  0 -1  0  0
 0  1  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  1  0 -1 -1  0  0
 0  0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0 -1  0  0  1  0
 0  0  1  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1 -1  0  0  0
 0  0 -1  0  0  1  0  0  0  0  0  0  0  0  0  0 -1  0  0  0 -1  0  1  0
 0  0  0 -1  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1 -1  0
 0  0  0  1  0 -1  0  0  0  0  0  0  0  0  0  0 -1 -1  0  0  0  1  0  0
 0  0  0  0 -1  1  0  0  0  0  0  0  0  0  0  0  0 -1  1  0  0  0 -1  0
 0  0  0  0  0  0 -1 -1  0  0  0  0  1  0  1  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  1  0  1  0  1  0  0  0  1  1  0  0  0  0  0  0  0  0
 0  0  0  0  0  0  1  0  0 -1  0  1  0  0  0 -1  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  1 -1  0  1 -1  0  0  0  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  1  0  1  0  1  1  1  0  0  0  0  0  0  0  0  0  0
 0  0  0  0  0  0  0  0  1  1  0  0  0 -1 -1  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  0  0  0 -1  0 -1  1  0  1  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  1  1  0  1  1  0
)";

// G16 and G17 are published with permuted row orders; row i of the display
// is the vertex perm[i] (1-based). We relabel so index 0 is v_1 again.
constexpr std::array<int, 12> kPermG16 = {3, 2, 4, 6, 5, 1, 9, 7, 8, 10, 11, 12};
constexpr std::array<int, 12> kPermG17 = {1, 10, 12, 3, 4, 5, 9, 8, 7, 2, 6, 11};

template <size_t N>
IntMat apply_row_labels(const IntMat& disp, const std::array<int, N>& perm) {
    IntMat s(disp.rows, disp.cols);
    for (int i = 0; i < disp.rows; i++)
        for (int j = 0; j < disp.cols; j++) s.at(perm[i] - 1, perm[j] - 1) = disp.at(i, j);
    return s;
}

// ---- block calculus for the two parametric families -----------------------

IntMat D1() { return parse_int_matrix("0 -1\n1 0"); }
IntMat D2() { return parse_int_matrix("0 0 1 0\n0 0 0 1\n-1 0 0 0\n0 -1 0 0"); }
IntMat Q1() { return parse_int_matrix("1 1 -1 -1\n1 1 1 1"); }
IntMat Q2() { return parse_int_matrix("1 -1 0 0\n-1 1 0 0\n0 0 1 -1\n0 0 -1 1"); }
IntMat Q3() { return parse_int_matrix("1 1 0 0\n1 1 0 0\n0 0 1 1\n0 0 1 1"); }
IntMat Q4() { return parse_int_matrix("1 -1\n-1 1\n-1 -1\n1 1"); }
IntMat Q5() { return parse_int_matrix("1 -1\n1 -1\n1 1\n1 1"); }

IntMat M0() { return parse_int_matrix("1 0\n0 1"); }
IntMat M1() { return parse_int_matrix("-1 0\n0 1"); }
IntMat M2() { return parse_int_matrix("1 1\n1 1"); }
IntMat M3() { return parse_int_matrix("1 1\n-1 -1"); }
IntMat M4() { return parse_int_matrix("-1 1\n1 -1"); }

void paste(IntMat& s, int r0, int c0, const IntMat& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows > s.rows || c0 + b.cols > s.cols)
        throw Error("block paste out of bounds");
    for (int i = 0; i < b.rows; i++)
        for (int j = 0; j < b.cols; j++) s.at(r0 + i, c0 + j) = b.at(i, j);
}

// Assembles a block-tridiagonal skew matrix from diagonal blocks and
// superdiagonal blocks; the subdiagonal is forced to -transpose.
IntMat block_tridiagonal(const std::vector<IntMat>& diag, const std::vector<IntMat>& super,
                         int expected_order) {
    if (super.size() + 1 != diag.size()) throw Error("block tridiagonal: shape mismatch");
    int total = 0;
    for (const IntMat& d : diag) {
        if (!d.is_square()) throw Error("block tridiagonal: non-square diagonal block");
        total += d.rows;
    }
    if (total != expected_order)
        throw Error("block tridiagonal: assembled order " + std::to_string(total) +
                    " != " + std::to_string(expected_order));
    IntMat s(total, total);
    int off = 0;
    for (size_t i = 0; i < diag.size(); i++) {
        paste(s, off, off, diag[i]);
        if (i + 1 < diag.size()) {
            const IntMat& q = super[i];
            if (q.rows != diag[i].rows || q.cols != diag[i + 1].rows)
                throw Error("block tridiagonal: off-diagonal shape mismatch at block " +
                            std::to_string(i));
            paste(s, off, off + diag[i].rows, q);
            paste(s, off + diag[i].rows, off, -q.transpose());
        }
        off += diag[i].rows;
    }
    return s;
}

}  // namespace

Orientation fixed_orientation(FixedMatrix which) {
    switch (which) {
        case FixedMatrix::G4: return orientation_from_matrix(parse_int_matrix(kG4));
        case FixedMatrix::G16:
            return orientation_from_matrix(apply_row_labels(parse_int_matrix(kG16), kPermG16));
        case FixedMatrix::G17:
            return orientation_from_matrix(apply_row_labels(parse_int_matrix(kG17), kPermG17));
        case FixedMatrix::G31: return orientation_from_matrix(parse_int_matrix(kG31));
    }
    throw Error("unknown fixed matrix");
}

Orientation p2_lift(const Orientation& o) {
    int n = o.graph.n;
    int k = o.graph.max_degree();
    if (!is_regular(o.graph, k)) throw Error("p2_lift input must be regular");
    if (!gram(o, k).is_optimum) throw Error("p2_lift input is not optimum for its degree");
    if (2 * n > kMaxVertices) throw Error("p2_lift exceeds vertex cap");

    IntMat s = skew_matrix(o);
    IntMat big(2 * n, 2 * n);
    paste(big, 0, 0, s);
    paste(big, 0, n, IntMat::identity(n));
    paste(big, n, 0, -IntMat::identity(n));
    paste(big, n, n, -s);
    return orientation_from_matrix(big);
}

Orientation g12_family(int n) {
    if (n % 4 != 0 || n < 12)
        throw Error("g12 family needs n divisible by 4, n >= 12 (got " + std::to_string(n) + ")");
    int quads = (n - 4) / 4;
    bool odd_quarter = (n / 4) % 2 == 1;

    std::vector<IntMat> diag, super;
    diag.push_back(D1());
    for (int i = 0; i < quads; i++) diag.push_back(i % 2 == 0 ? D2() : -D2());
    diag.push_back(D1().transpose());

    super.push_back(Q1());
    for (int i = 0; i + 1 < quads; i++) super.push_back(i % 2 == 0 ? Q2() : Q3());
    super.push_back(odd_quarter ? Q5() : Q4());

    return orientation_from_matrix(block_tridiagonal(diag, super, n));
}

Orientation g26_family(int n) {
    if (n % 4 != 0 || n < 16)
        throw Error("g26 family needs n divisible by 4, n >= 16 (got " + std::to_string(n) + ")");
    int half = n / 2;
    int blocks = n / 4;  // 2x2 block rows per half

    std::vector<IntMat> zero2(blocks, IntMat(2, 2));
    std::vector<IntMat> super1, super3;
    super1.push_back(M2());
    super3.push_back(M3().transpose());
    for (int i = 1; i + 1 < blocks; i++) {
        super1.push_back(M3());
        super3.push_back(-M3().transpose());
    }
    IntMat a1 = block_tridiagonal(zero2, super1, half);
    IntMat a3 = block_tridiagonal(zero2, super3, half);

    IntMat a2(half, half);
    paste(a2, 0, 0, M0());
    for (int i = 1; i < blocks; i++) paste(a2, 2 * i, 2 * i, M1());
    paste(a2, 0, 2 * (blocks - 1), -M3());
    paste(a2, 2 * (blocks - 1), 0, M4());

    IntMat s(n, n);
    paste(s, 0, 0, a1);
    paste(s, 0, half, a2);
    paste(s, half, 0, -a2.transpose());
    paste(s, half, half, a3);
    return orientation_from_matrix(s);
}

Orientation hypercube_orientation(int d) {
    if (d < 1 || d > 6) throw Error("hypercube dimension outside 1..6");
    Orientation o = orient_forward(path_graph(2));
    for (int i = 1; i < d; i++) o = p2_lift(o);
    return o;
}

std::vector<BlockIdentity> block_identities() {
    std::vector<BlockIdentity> out;
    auto check = [&](const std::string& name, const IntMat& got, const IntMat& want) {
        out.push_back({name, got == want});
    };
    IntMat d1 = D1(), d2 = D2(), q1 = Q1(), q2 = Q2(), q3 = Q3(), q4 = Q4(), q5 = Q5();
    IntMat i2 = IntMat::identity(2), i4 = IntMat::identity(4);
    IntMat z2(2, 2), z4(4, 4), z42(4, 2), z24(2, 4);

    check("A = D1^2 - Q1 Q1^T = -5 I2", d1 * d1 - q1 * q1.transpose(), -5 * i2);
    check("B = -Q1^T Q1 + D2^2 - Q2 Q2^T = -5 I4",
          -(q1.transpose() * q1) + d2 * d2 - q2 * q2.transpose(), -5 * i4);
    check("C = -Q2^T Q2 + D2^2 - Q3 Q3^T = -5 I4",
          -(q2.transpose() * q2) + d2 * d2 - q3 * q3.transpose(), -5 * i4);
    check("D = -Q3^T Q3 + D2^2 - Q2 Q2^T = -5 I4",
          -(q3.transpose() * q3) + d2 * d2 - q2 * q2.transpose(), -5 * i4);
    check("E = -Q2^T Q2 + D2^2 - Q5 Q5^T = -5 I4",
          -(q2.transpose() * q2) + d2 * d2 - q5 * q5.transpose(), -5 * i4);
    check("F = -Q5^T Q5 + (D1^T)^2 = -5 I2",
          -(q5.transpose() * q5) + d1.transpose() * d1.transpose(), -5 * i2);
    check("G = D1 Q1 + Q1 D2 = 0", d1 * q1 + q1 * d2, z24);
    check("H = D2 Q2 - Q2 D2 = 0", d2 * q2 - q2 * d2, z4);
    check("I = -D2 Q3 + Q3 D2 = 0", -(d2 * q3) + q3 * d2, z4);
    check("J = -D2 Q5 + Q5 D1^T = 0", -(d2 * q5) + q5 * d1.transpose(), z42);
    check("K = Q1 Q2 = 0", q1 * q2, z24);
    check("L = Q2 Q3 = 0", q2 * q3, z4);
    check("M = Q3 Q2 = 0", q3 * q2, z4);
    check("O = Q2 Q5 = 0", q2 * q5, z42);
    check("P = -Q1^T D1 - D2 Q1^T = 0", -(q1.transpose() * d1) - d2 * q1.transpose(),
          IntMat(4, 2));
    check("Q = -Q2^T D2 + D2 Q2^T = 0", -(q2.transpose() * d2) + d2 * q2.transpose(), z4);
    check("R = Q3^T D2 - D2 Q3^T = 0", q3.transpose() * d2 - d2 * q3.transpose(), z4);
    check("U = Q5^T D2 - D1^T Q5^T = 0", q5.transpose() * d2 - d1.transpose() * q5.transpose(),
          IntMat(2, 4));
    // Terminator variant with Q4 (n/4 even).
    check("-Q3^T Q3 + D2^2 - Q4 Q4^T = -5 I4",
          -(q3.transpose() * q3) + d2 * d2 - q4 * q4.transpose(), -5 * i4);
    check("-Q4^T Q4 + (D1^T)^2 = -5 I2", -(q4.transpose() * q4) + d1.transpose() * d1.transpose(),
          -5 * i2);
    check("D2 Q4 + Q4 D1^T = 0", d2 * q4 + q4 * d1.transpose(), z42);
    check("Q3 Q4 = 0", q3 * q4, z42);

    IntMat m0 = M0(), m1 = M1(), m2 = M2(), m3 = M3(), m4 = M4();
    check("M2 M1 + M M3^T = 0", m2 * m1 + m0 * m3.transpose(), z2);
    check("M2^T M + M1 M3 = 0", m2.transpose() * m0 + m1 * m3, z2);
    check("M3 M1 - M1 M3^T = 0", m3 * m1 - m1 * m3.transpose(), z2);
    check("-M3^T M1 + M1 M3 = 0", -(m3.transpose() * m1) + m1 * m3, z2);
    check("M2^T M3 = 0", m2.transpose() * m3, z2);
    check("M3^2 = 0", m3 * m3, z2);
    check("M3 M4 = 0", m3 * m4, z2);
    check("M4 M3^T = 0", m4 * m3.transpose(), z2);
    check("M M4^T - M3 M1 = 0", m0 * m4.transpose() - m3 * m1, z2);
    check("M4 M - M1 M3^T = 0", m4 * m0 - m1 * m3.transpose(), z2);
    check("M1^2 = M", m1 * m1, m0);
    check("X5 = M2 M3 = 0", m2 * m3, z2);
    check("X2 = -M2^T M2 - M3 M3^T = -4M", -(m2.transpose() * m2) - m3 * m3.transpose(), -4 * m0);
    check("X3 = -M3^T M3 - M3 M3^T = -4M", -(m3.transpose() * m3) - m3 * m3.transpose(), -4 * m0);
    check("X1 - M^2 - M3 M3^T = -5M",
          -(m2 * m2.transpose()) - m0 * m0 - m3 * m3.transpose(), -5 * m0);
    check("X2 - M1^2 = -5M", -(m2.transpose() * m2) - m3 * m3.transpose() - m1 * m1, -5 * m0);
    check("X3 - M1^2 = -5M", -(m3.transpose() * m3) - m3 * m3.transpose() - m1 * m1, -5 * m0);
    check("X4 - M4 M4^T - M1^2 = -5M",
          -(m3.transpose() * m3) - m4 * m4.transpose() - m1 * m1, -5 * m0);
    return out;
}

}  // namespace skewopt
