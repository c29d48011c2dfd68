#pragma once

// Exact integer matrices of the monodromy story: Stokes matrix, reflection
// generators, the braid/rotation matrices, the index-3 congruence-type
// subgroup of SL2(Z) with its symmetric-square representation, and the
// cube-root-of-j transformation character.

#include "lgqc/modular.hpp"
#include "lgqc/numeric.hpp"

#include <array>
#include <string>

namespace lgqc {

struct Mat3 {
    std::array<std::array<long, 3>, 3> a{};
    static Mat3 id() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
        return m;
    }
    friend Mat3 operator*(const Mat3 &x, const Mat3 &y) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long s = 0;
                for (int k = 0; k < 3; ++k) s += x.a[i][k] * y.a[k][j];
                r.a[i][j] = s;
            }
        return r;
    }
    friend Mat3 operator-(const Mat3 &x) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = -x.a[i][j];
        return r;
    }
    friend bool operator==(const Mat3 &x, const Mat3 &y) { return x.a == y.a; }
    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
        return r;
    }
    long det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }
};

struct Mat2 {
    std::array<std::array<long, 2>, 2> a{};
    Mat2() = default;
    Mat2(long p, long q, long r, long s) : a{{{p, q}, {r, s}}} {}
    static Mat2 id() { return Mat2(1, 0, 0, 1); }
    friend Mat2 operator*(const Mat2 &x, const Mat2 &y) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
        return r;
    }
    friend Mat2 operator-(const Mat2 &x) { return Mat2(-x.a[0][0], -x.a[0][1], -x.a[1][0], -x.a[1][1]); }
    friend bool operator==(const Mat2 &x, const Mat2 &y) { return x.a == y.a; }
    long det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    Mat2 inv_unimodular() const { // for det = 1
        return Mat2(a[1][1], -a[0][1], -a[1][0], a[0][0]);
    }
};

struct MonodromyConstants {
    Mat3 S, T, T0, R1, R2, R3, mu;
    Mat2 r1, r2, r3; // generators of the index-3 subgroup, in the order their
                     // 3x3 images are displayed
};

inline MonodromyConstants monodromy_constants() {
    MonodromyConstants c;
    c.S.a = {{{1, 0, 0}, {3, 1, 0}, {-3, -3, 1}}};
    c.T.a = {{{0, -1, 0}, {0, 0, 1}, {-1, -3, 3}}};
    c.T0.a = {{{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}};
    c.R1.a = {{{-1, -3, 3}, {0, 1, 0}, {0, 0, 1}}};
    c.R2.a = {{{1, 0, 0}, {-3, -1, 3}, {0, 0, 1}}};
    c.R3.a = {{{1, 0, 0}, {0, 1, 0}, {3, 3, -1}}};
    c.mu.a = {{{-1, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
    c.r1 = Mat2(0, -1, 1, 0);
    c.r2 = Mat2(-1, 2, -1, 1);
    c.r3 = Mat2(1, -1, 2, -1);
    return c;
}

// conjugation (1/4) P m Q realizing the (w1,w2,w3) basis change; entries of the
// images used here are integral, enforced by assertion
inline Mat3 basis_change(const Mat3 &m) {
    Mat3 P, Q;
    P.a = {{{1, 2, -1}, {0, 1, -1}, {1, 1, -2}}};
    Q.a = {{{2, -6, 2}, {2, 2, -2}, {2, -2, -2}}};
    Mat3 t = P * m * Q;
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (t.a[i][j] % 4 != 0) throw std::domain_error("basis_change: non-integral image");
            r.a[i][j] = t.a[i][j] / 4;
        }
    return r;
}

// symmetric-square representation SL2 -> SL3
inline Mat3 sym_square(const Mat2 &g) {
    long a = g.a[0][0], b = g.a[0][1], c = g.a[1][0], d = g.a[1][1];
    Mat3 r;
    r.a = {{{a * a, 2 * a * b, b * b}, {a * c, a * d + b * c, b * d}, {c * c, 2 * c * d, d * d}}};
    return r;
}

// membership in the kernel of the cube-root character: mod 3 the matrix is
// antidiagonal (0,*;*,0) or symmetric off-diagonal (*,b;b,*)
inline bool gamma3_membership(const Mat2 &m) {
    if (m.det() != 1) throw std::invalid_argument("gamma3_membership: det != 1");
    auto m3 = [](long v) { return ((v % 3) + 3) % 3; };
    bool anti = m3(m.a[0][0]) == 0 && m3(m.a[1][1]) == 0;
    bool symm = m3(m.a[0][1]) == m3(m.a[1][0]);
    return anti || symm;
}

// exponent of the zeta_3 character in gamma2(g tau) = zeta_3^e gamma2(tau)
inline long gamma2_character_exponent(const Mat2 &g) {
    long a = g.a[0][0], b = g.a[0][1], c = g.a[1][0], d = g.a[1][1];
    return ((a * c - a * b + a * a * c * d - c * d) % 3 + 3) % 3;
}

// numeric residual of the character law at tau
inline double gamma2_character_check(const Mat2 &g, const TauPoint &tp) {
    if (g.det() != 1) throw std::invalid_argument("gamma2_character_check: det != 1");
    cplx tau = tp.tau;
    cplx gt = ((double)g.a[0][0] * tau + (double)g.a[0][1]) /
              ((double)g.a[1][0] * tau + (double)g.a[1][1]);
    cplx lhs = j_family(TauPoint(gt, 0.01)).gamma2;
    cplx zeta = std::exp(cplx(0, 2 * PI / 3) * (double)gamma2_character_exponent(g));
    cplx rhs = zeta * j_family(tp).gamma2;
    return std::abs(lhs - rhs);
}

struct RelationCheck {
    std::string name;
    bool pass;
};

inline std::vector<RelationCheck> relations_report() {
    auto c = monodromy_constants();
    std::vector<RelationCheck> out;
    auto add = [&](const std::string &n, bool ok) { out.push_back({n, ok}); };

    Mat3 I = Mat3::id();
    add("T0 = T*R1", c.T0 == c.T * c.R1);
    add("T0^3 = -I", c.T0 * c.T0 * c.T0 == -I);
    Mat3 T0inv = c.T0.transpose(); // T0 is a signed permutation; inverse = transpose
    add("T0*T0^{-1} = I", c.T0 * T0inv == I);
    // solution rows multiply these matrices from the left (phi_left =
    // phi_right S), so conjugation acts with the factors in this order
    add("R2 = T0 R1 T0^{-1} (row-vector action)", c.R2 == T0inv * c.R1 * c.T0);
    add("R3 = T0^2 R1 T0^{-2} (row-vector action)", c.R3 == T0inv * T0inv * c.R1 * c.T0 * c.T0);
    add("R1^2 = I", c.R1 * c.R1 == I);
    add("R2^2 = I", c.R2 * c.R2 == I);
    add("R3^2 = I", c.R3 * c.R3 == I);
    add("det S = 1", c.S.det() == 1);
    add("det T0 = -1 (forced by T0^3 = -I)", c.T0.det() == -1);
    add("det R1 = -1", c.R1.det() == -1);

    // reflection formula: R_j acting on basis vectors phi^(i) by
    // phi^(i) - (S+S^T)_{ij} phi^(j) reproduces R_j (columns) and squares to I
    Mat3 G = c.S;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) G.a[i][j] += c.S.a[j][i];
    const Mat3 *Rs[3] = {&c.R1, &c.R2, &c.R3};
    bool refl_ok = true;
    for (int j = 0; j < 3; ++j) {
        Mat3 R;
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < 3; ++r)
                R.a[r][i] = (i == r ? 1 : 0) - (r == j ? G.a[i][j] : 0);
        refl_ok = refl_ok && (R == *Rs[j]) && (R * R == I);
    }
    add("reflection formula reproduces R_j and R_j^2 = I", refl_ok);
    return out;
}

inline std::vector<RelationCheck> change_of_basis_report() {
    auto c = monodromy_constants();
    std::vector<RelationCheck> out;
    auto add = [&](const std::string &n, bool ok) { out.push_back({n, ok}); };

    Mat3 BR1 = basis_change(c.R1);
    Mat3 BT04 = basis_change(c.T0 * c.T0 * c.T0 * c.T0);
    Mat3 BT03 = basis_change(c.T0 * c.T0 * c.T0);
    Mat3 BR2 = basis_change(c.R2);
    Mat3 BR3 = basis_change(c.R3);

    Mat3 w1; w1.a = {{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}};
    Mat3 w2; w2.a = {{{0, 0, 1}, {0, -1, 1}, {1, -2, 1}}};
    Mat3 w3; w3.a = {{{-1, 4, -4}, {-1, 3, -2}, {-1, 2, -1}}};
    Mat3 w4; w4.a = {{{-1, 2, -1}, {-2, 3, -1}, {-4, 4, -1}}};
    // the printed B(R1) display carries the opposite overall sign (the same
    // parity twist seen on the 2x2 generator images below); computed verbatim
    add("B(R1) = -print (sign-twisted display)", BR1 == -w1);
    add("B(T0^4) matches print", BT04 == w2);
    add("B(T0^3) = -I", BT03 == -Mat3::id());
    add("B(R2) matches print", BR2 == w3);
    add("B(R3) matches print", BR3 == w4);

    // printed 3x3 images of the 2x2 generators are the sign-twisted symmetric
    // squares (the homomorphism into the reflection group carries the parity
    // character); r1's image needs no twist
    add("image of r1 = sym^2(r1)", sym_square(c.r1) == w1);
    add("image of r2 = -sym^2(r2) = B(R2)", -sym_square(c.r2) == w3);
    add("image of r3 = -sym^2(r3) = B(R3)", -sym_square(c.r3) == w4);
    return out;
}

} // namespace lgqc
