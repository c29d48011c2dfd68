#pragma once

// Frobenius-manifold data of the big quantum cohomology of the projective
// plane: intersection form, canonical coordinates (numeric root tracking and
// the one-variable expansion in Q^{1/3} t3), transition matrix, the
// cube-root-of-unity sum identities, and the cross-ratio of the canonical
// roots as an exact series.

#include "lgqc/cyclotomic.hpp"
#include "lgqc/gw.hpp"
#include "lgqc/series.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>
#include <vector>

namespace lgqc {

struct FrobeniusPoint {
    cplx t1{0.0}, Q{1.0}, t3{0.0};
    FrobeniusPoint() = default;
    FrobeniusPoint(cplx t1_, cplx Q_, cplx t3_) : t1(t1_), Q(Q_), t3(t3_) {
        if (Q == 0.0) throw std::invalid_argument("FrobeniusPoint: Q = 0");
    }
};

// growth-rate constant of the curve counts; the series below converge for
// |Q (t3)^3| < 1/a
inline constexpr double kGrowthRate = 0.138;

inline cplx novikov_combination(const FrobeniusPoint &p) { return p.Q * p.t3 * p.t3 * p.t3; }

inline void require_domain(const FrobeniusPoint &p) {
    if (std::abs(novikov_combination(p)) >= 1.0 / kGrowthRate)
        throw std::domain_error("frobenius: point outside the convergence domain");
}

// shared curve-count table, grown on demand
inline GWTable gw_table_for(long order) {
    static std::mutex mu;
    static GWTable table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.max_degree < order) table = kontsevich_table(std::max(order, 2 * table.max_degree));
    return table;
}

struct IntersectionForm {
    std::array<std::array<cplx, 3>, 3> g{};
    static std::array<std::array<cplx, 3>, 3> eta() {
        std::array<std::array<cplx, 3>, 3> e{};
        e[0][2] = e[1][1] = e[2][0] = 1.0;
        return e;
    }
};

// Each nontrivial entry is a sum of c_n Q^n (t3)^{3n-k} with k = 3, 2, 1; the
// negative t3-powers cancel degree by degree, so the entries are assembled as
// prefactor * Horner series in w = Q (t3)^3 and stay finite at t3 = 0.
inline IntersectionForm intersection_form(const FrobeniusPoint &p, int order) {
    require_domain(p);
    GWTable t = gw_table_for(order);
    cplx w = novikov_combination(p);
    auto horner = [&](auto coeff) {
        cplx acc = 0;
        for (long n = order; n >= 1; --n)
            acc = acc * w + to_double(coeff(n) * Rat(t.n[n - 1]) / Rat(factorial(3 * n - 1)));
        return acc;
    };
    // numerators of (3/t3^3)[9P'' - 9P' + 2P], (2/t3^2)[3P'' - P'], P''/t3
    cplx g11 = p.Q * horner([](long n) { return Rat(3 * (9 * n * n - 9 * n + 2)); });
    cplx g12 = p.Q * p.t3 * horner([](long n) { return Rat(2 * n * (3 * n - 1)); });
    cplx g22 = p.t1 + p.Q * p.t3 * p.t3 * horner([](long n) { return Rat(n * n); });
    IntersectionForm f;
    f.g = {{{g11, g12, p.t1}, {g12, g22, cplx(3.0)}, {p.t1, cplx(3.0), -p.t3}}};
    return f;
}

// det of the t3 = 0 intersection form; vanishes exactly on (t1)^3 + 27 Q = 0
inline cplx small_discriminant(cplx t1, cplx Q) { return -(t1 * t1 * t1 + 27.0 * Q); }

inline cplx det3(const std::array<std::array<cplx, 3>, 3> &m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// det(g - u*eta) as a monic cubic in u: u^3 + c2 u^2 + c1 u + c0
inline std::array<cplx, 3> spectral_cubic(const IntersectionForm &f) {
    cplx A = f.g[0][0], B = f.g[0][1], C = f.g[0][2], D = f.g[1][1], E = f.g[2][2];
    cplx c2 = -(2.0 * C + D);
    cplx c1 = C * C + 2.0 * C * D - A * E - 6.0 * B;
    cplx c0 = A * D * E - 9.0 * A - B * B * E + 6.0 * B * C - C * C * D;
    return {c2, c1, c0};
}

inline std::array<cplx, 3> solve_monic_cubic(const std::array<cplx, 3> &c) {
    const cplx z3 = std::exp(cplx(0, 2 * PI / 3));
    cplx c2 = c[0], c1 = c[1], c0 = c[2];
    cplx pp = c1 - c2 * c2 / 3.0;
    cplx qq = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    cplx disc = std::sqrt(qq * qq / 4.0 + pp * pp * pp / 27.0);
    cplx C1 = std::pow(-qq / 2.0 + disc, 1.0 / 3.0);
    if (std::abs(C1) < 1e-300) C1 = std::pow(-qq / 2.0 - disc, 1.0 / 3.0);
    std::array<cplx, 3> r;
    for (int k = 0; k < 3; ++k) {
        cplx wk = (k == 0) ? cplx(1.0) : (k == 1 ? z3 : z3 * z3);
        cplx y = (std::abs(C1) < 1e-300) ? std::pow(-qq, 1.0 / 3.0) * wk
                                         : wk * C1 - pp / (3.0 * wk * C1);
        cplx u = y - c2 / 3.0;
        for (int it = 0; it < 6; ++it) { // Newton polish on the full cubic
            cplx p = ((u + c2) * u + c1) * u + c0;
            cplx dp = (3.0 * u + 2.0 * c2) * u + c1;
            if (std::abs(dp) == 0.0) break;
            u -= p / dp;
        }
        r[k] = u;
    }
    return r;
}

struct CanonicalTriple {
    std::array<cplx, 3> u{};
};

// Roots of det(g - u*eta) tracked along the straight t3 segment from 0, so the
// labels continue the t3 = 0 anchor (t1 + 3Q^{1/3}, t1 + 3Q^{1/3} z3^2,
// t1 + 3Q^{1/3} z3), principal cube root.
inline std::vector<CanonicalTriple> canonical_path(const FrobeniusPoint &p, int order, int steps) {
    require_domain(p);
    const cplx z3 = std::exp(cplx(0, 2 * PI / 3));
    cplx r = std::pow(p.Q, 1.0 / 3.0);
    std::vector<CanonicalTriple> path;
    path.push_back({{p.t1 + 3.0 * r, p.t1 + 3.0 * r * z3 * z3, p.t1 + 3.0 * r * z3}});
    for (int s = 1; s <= steps; ++s) {
        FrobeniusPoint ps(p.t1, p.Q, p.t3 * ((double)s / steps));
        auto roots = solve_monic_cubic(spectral_cubic(intersection_form(ps, order)));
        double scale = 0;
        for (auto &u : roots) scale = std::max(scale, std::abs(u));
        double dmin = std::abs(roots[0] - roots[1]);
        dmin = std::min(dmin, std::abs(roots[0] - roots[2]));
        dmin = std::min(dmin, std::abs(roots[1] - roots[2]));
        if (dmin < 1e-9 * std::max(scale, 1.0)) {
            std::ostringstream os;
            os << "canonical_path: root collision near t3 = " << ps.t3;
            throw std::domain_error(os.str());
        }
        // continue labels: permutation minimizing total displacement
        const auto &prev = path.back().u;
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        double best = 1e300;
        int bi = 0;
        for (int pi = 0; pi < 6; ++pi) {
            double d = 0;
            for (int i = 0; i < 3; ++i) d += std::abs(roots[perms[pi][i]] - prev[i]);
            if (d < best) { best = d; bi = pi; }
        }
        path.push_back({{roots[perms[bi][0]], roots[perms[bi][1]], roots[perms[bi][2]]}});
    }
    return path;
}

inline CanonicalTriple canonical_numeric(const FrobeniusPoint &p, int order, int steps = 60) {
    if (p.t3 == 0.0) return canonical_path(p, order, 0).front();
    return canonical_path(p, order, steps).back();
}

struct CanonicalSeries {
    int N = 0;
    std::vector<Rat> A;         // A[n-1] = exact coefficient of (Q^{1/3} t3)^n on
                                // the rational branch; branch k carries z3^{nk}
    std::vector<Rat> A_printed; // published recursion, evaluated verbatim
    std::vector<Rat> ratio;     // printed/derived per index (0 where derived = 0)
    std::array<Rat, 3> family_factor{};  // summary per index class n mod 3
    std::array<bool, 3> family_constant{};
};

// Exact coefficients: (u - t1) t3 = f(w) with w = Q^{1/3} t3 satisfies the
// cubic (D - f)^3 - s1 (D - f)^2 + s2 (D - f) - s3 = 0 whose coefficients are
// series in w^3. The triple root at w = 0 resolves at first order, and the
// coefficient of w^{n+2} is affine in the unknown A_n, so each order is a
// linear solve; the full residual is checked at the end.
inline std::vector<Rat> canonical_series_exact(int N) {
    int K = N + 3;
    long phi_ord = K / 3 + 1;
    GWTable t = gw_table_for(phi_ord);
    auto inflate = [&](const Series<Rat> &s) {
        Series<Rat> r(K);
        for (long n = 1; n <= phi_ord; ++n)
            if (3 * n <= K) r.c[3 * n] = s.c[n];
        return r;
    };
    Series<Rat> P0 = inflate(phi_derivative_series(t, 0, (int)phi_ord));
    Series<Rat> P1 = inflate(phi_derivative_series(t, 1, (int)phi_ord));
    Series<Rat> P2 = inflate(phi_derivative_series(t, 2, (int)phi_ord));
    Series<Rat> D = Series<Rat>::constant(K, Rat(9)) + P2;
    Series<Rat> s1 = Series<Rat>::constant(K, Rat(27)) + Rat(2) * P2;
    Series<Rat> s2 = Series<Rat>::constant(K, Rat(243)) + Rat(6) * P0 - Rat(15) * P1 +
                     Rat(27) * P2 + P2 * P2;
    Series<Rat> b = Series<Rat>::constant(K, Rat(27)) + Rat(2) * P1 - Rat(3) * P2;
    Series<Rat> s3 = b * b;
    auto residual = [&](const Series<Rat> &f) {
        Series<Rat> z = D - f;
        return z * z * z - s1 * (z * z) + s2 * z - s3;
    };
    Series<Rat> g(K);
    g.c[1] = Rat(3); // anchor slope: u -> t1 + 3 Q^{1/3}
    for (int n = 2; n <= N; ++n) {
        Series<Rat> r0 = residual(g);
        Series<Rat> g1 = g;
        g1.c[n] = Rat(1);
        Series<Rat> r1 = residual(g1);
        Rat c0 = r0.c[n + 2], slope = r1.c[n + 2] - c0;
        if (slope == 0) throw std::logic_error("canonical_series_exact: degenerate order");
        g.c[n] = -c0 / slope;
    }
    Series<Rat> res = residual(g);
    for (int k = 0; k <= std::min(N + 2, K); ++k)
        if (!(res.c[k] == 0)) throw std::logic_error("canonical_series_exact: residual nonzero");
    return std::vector<Rat>(g.c.begin() + 1, g.c.begin() + N + 1);
}

// 3 cos(2 pi m / 3) as a rational
inline Rat three_cos(long m) { return (((m % 3) + 3) % 3 == 0) ? Rat(3) : Rat(-3, 2); }

// The published closed form / recursions for the same coefficients, evaluated
// verbatim with the derived values substituted on the right-hand sides so that
// each index class is compared in isolation. Known mismatches (a factor 3 on
// the 3n class, a sign on 3n-1, the squared-seed inconsistency on 3n-2) are
// surfaced through the ratio fields, never patched here.
inline CanonicalSeries canonical_series(int N, int gw_order) {
    if (N > 3 * gw_order) throw std::invalid_argument("canonical_series: N > 3*gw_order");
    CanonicalSeries cs;
    cs.N = N;
    cs.A = canonical_series_exact(N);
    GWTable t = gw_table_for(std::max<long>(gw_order, N / 3 + 1));
    auto NN = [&](long d) { return Rat(t.n[d - 1]); };
    auto Ad = [&](long i) { return cs.A[i - 1]; }; // derived values on RHS
    Rat A1 = Ad(1);
    cs.A_printed.assign(N, Rat(0));
    for (long idx = 1; idx <= N; ++idx) {
        long rem = idx % 3;
        if (rem == 0) {
            long n = idx / 3;
            cs.A_printed[idx - 1] = Rat(n * n) * NN(n) / Rat(factorial(3 * n - 1));
        } else if (rem == 2) {
            long n = (idx + 1) / 3;
            Rat sum(0);
            for (long n2 = 3; n2 <= 3 * n - 1; ++n2)
                sum += three_cos(n2 - 1) * Ad(3 * n - n2 + 1) * Ad(n2 - 1);
            cs.A_printed[idx - 1] =
                (Rat(6 - 15 * n - 9 * n * n) * NN(n) / Rat(factorial(3 * n - 1)) - sum) /
                (Rat(3) * A1);
        } else {
            long n = (idx + 2) / 3;
            Rat delta(0);
            if (n > 1) {
                for (long n2 = 2; n2 <= n; ++n2) {
                    Rat pref = Rat(6 * (n2 - 1) - 3 * (n - n2 + 1) * (n2 - 1) * (n2 - 1)) +
                               Rat(-4 * (n - n2 + 1) * (n2 - 1)) +
                               Rat(-9 * (n - n2 + 1) * (n - n2 + 1) * (n2 - 1) * (n2 - 1));
                    delta += pref * NN(n - n2 + 1) * NN(n2 - 1) /
                             Rat(factorial(3 * n - 3 * n2 + 2) * factorial(3 * n2 - 4));
                }
            }
            Rat sum1(0);
            for (long n3 = 2; n3 <= 3 * n - 2; ++n3)
                sum1 += three_cos(1 + 2 * n3) * Ad(3 * n - 1 - n3) * A1 * Ad(n3);
            Rat sum2(0);
            for (long n2 = 2; n2 <= 3 * n - 3; ++n2)
                for (long n3 = 1; n3 <= 3 * n - n2 - 1; ++n3)
                    sum2 += three_cos(n2 + 2 * n3) * Ad(3 * n - n2 - n3) * Ad(n2) * Ad(n3);
            cs.A_printed[idx - 1] =
                (Rat(54 - 243 * n + 243 * n * n) * NN(n) / Rat(factorial(3 * n - 1)) + delta -
                 sum1) / (Rat(9) * A1 * A1) -
                sum2 / (Rat(9) * A1 * A1);
        }
    }
    cs.ratio.assign(N, Rat(0));
    std::array<bool, 3> seen{};
    for (long idx = 1; idx <= N; ++idx) {
        if (cs.A[idx - 1] == 0) continue;
        Rat r = cs.A_printed[idx - 1] / cs.A[idx - 1];
        cs.ratio[idx - 1] = r;
        int fam = (int)(idx % 3);
        if (!seen[fam]) {
            cs.family_factor[fam] = r;
            cs.family_constant[fam] = true;
            seen[fam] = true;
        } else if (!(cs.family_factor[fam] == r)) {
            cs.family_constant[fam] = false;
        }
    }
    return cs;
}

// u_label from the truncated series; labels 1, 2, 3 carry branch exponents
// 0, 2, 1 (the anchor ordering). Regular at t3 = 0.
inline cplx canonical_series_eval(const CanonicalSeries &cs, int label, const FrobeniusPoint &p) {
    if (label < 1 || label > 3) throw std::invalid_argument("canonical_series_eval: label");
    static const int kexp[3] = {0, 2, 1};
    int k = kexp[label - 1];
    cplx r = std::pow(p.Q, 1.0 / 3.0);
    cplx s = r * p.t3;
    cplx acc = 0;
    for (int n = cs.N; n >= 1; --n) {
        cplx zk = std::exp(cplx(0, 2 * PI / 3) * (double)((n * k) % 3));
        acc = acc * s + to_double(cs.A[n - 1]) * zk;
    }
    return p.t1 + r * acc; // (1/t3) sum A_n z3^{nk} s^n = Q^{1/3} sum ... s^{n-1}
}

// Independent oracle: extract the branch-0 coefficients from the root-tracked
// u_1 sampled on a circle of s = Q^{1/3} t3 values (trapezoid quadrature; the
// only contamination is from orders n + M and beyond).
inline std::vector<cplx> canonical_series_fit(cplx t1, cplx Q, int count, int order) {
    int M = std::max(count + 8, 16);
    const double radius = 0.3;
    cplx r = std::pow(Q, 1.0 / 3.0);
    std::vector<cplx> F(M);
    for (int j = 0; j < M; ++j) {
        cplx s = radius * std::exp(cplx(0, 2 * PI * j / M));
        FrobeniusPoint p(t1, Q, s / r);
        cplx u1 = canonical_numeric(p, order).u[0];
        F[j] = (u1 - t1) * p.t3; // = sum A_n s^n
    }
    std::vector<cplx> out(count);
    for (int n = 1; n <= count; ++n) {
        cplx acc = 0;
        for (int j = 0; j < M; ++j)
            acc += F[j] * std::exp(cplx(0, -2 * PI * j * n / M));
        out[n - 1] = acc / (double)M / std::pow(radius, n);
    }
    return out;
}

struct TransitionMatrix {
    std::array<std::array<cplx, 3>, 3> psi{}; // rows: canonical labels, columns: flat
};

// Rows are right-eigenvectors of eta*g (equivalently, Psi g eta = diag(u) Psi
// since g is symmetric), normalized so that Psi^T Psi = eta. Away from t3 = 0
// the closed form below in the z_i is used; at t3 = 0 it degenerates (the z_i
// collide at 9) and the exact limit matrix takes over.
inline TransitionMatrix transition_matrix(const FrobeniusPoint &p, int order) {
    require_domain(p);
    TransitionMatrix tm;
    if (p.t3 == 0.0) {
        cplx r = std::pow(p.Q, 1.0 / 3.0);
        cplx z6 = std::exp(cplx(0, PI / 3));
        double is3 = 1.0 / std::sqrt(3.0);
        tm.psi = {{{is3 / r, is3, is3 * r},
                   {is3 * std::conj(z6) / r, -is3, is3 * z6 * r},
                   {is3 * z6 / r, -is3, is3 * std::conj(z6) * r}}};
        return tm;
    }
    auto u = canonical_numeric(p, order).u;
    GWTable t = gw_table_for(order);
    cplx w = novikov_combination(p);
    cplx phi1 = series_eval_c(
        [&] { Series<cplx> s(order); for (long n = 1; n <= order; ++n)
                  s.c[n] = to_double(Rat(n) * Rat(t.n[n - 1]) / Rat(factorial(3 * n - 1)));
              return s; }(), w);
    cplx phi2 = series_eval_c(
        [&] { Series<cplx> s(order); for (long n = 1; n <= order; ++n)
                  s.c[n] = to_double(Rat(n * n) * Rat(t.n[n - 1]) / Rat(factorial(3 * n - 1)));
              return s; }(), w);
    std::array<cplx, 3> z;
    for (int i = 0; i < 3; ++i) z[i] = 9.0 + phi2 - (u[i] - p.t1) * p.t3;
    double scale = std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[2]), 1.0});
    for (int i = 0; i < 3; ++i) {
        if (std::abs(z[i]) < 1e-10 * scale)
            throw std::domain_error("transition_matrix: vanishing z_i");
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(z[i] - z[j]) < 1e-10 * scale)
                throw std::domain_error("transition_matrix: z_i collision");
    }
    // Component ratios follow from the two lower rows of the pencil
    // g - u*eta evaluated on the row vector (1, psi2, psi3).
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        cplx h = p.t3 * std::sqrt(z[i]) / (std::sqrt(z[i] - z[j]) * std::sqrt(z[i] - z[k]));
        tm.psi[i][0] = h;
        tm.psi[i][1] = h * (27.0 + 2.0 * phi1 - 3.0 * phi2 - 3.0 * z[i]) / (z[i] * p.t3);
        tm.psi[i][2] = h * (81.0 + 6.0 * phi1 - 9.0 * phi2 - 18.0 * z[i] + z[i] * z[i] -
                            z[i] * phi2) / (z[i] * p.t3 * p.t3);
    }
    return tm;
}

struct ZetaIdentityReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool all_pass() const { return failures.empty(); }
};

// Exact verification over Q(zeta3) of the four root-of-unity sum families used
// by the coefficient recursions.
inline ZetaIdentityReport zeta_identities(long k_min, long k_max) {
    ZetaIdentityReport rep;
    auto z = [](long k) { return Cyc::zeta3_pow(k); };
    auto b = [&](long k1, long k2) { return z(k1) + z(k1 + 2 * k2) + z(2 * k1); };
    auto two_cos = [](long m) { return (((m % 3) + 3) % 3 == 0) ? Cyc(2) : Cyc(-1); };
    auto fail = [&](const std::string &what) { rep.failures.push_back(what); };
    for (long k = k_min; k <= k_max; ++k) {
        ++rep.checked;
        if (!(z(k) + z(2 * k) + z(3 * k) == Cyc(1) + two_cos(k))) fail("power sum at k");
        ++rep.checked;
        if (!(b(k, k) == Cyc(1) + two_cos(k))) fail("diagonal pair sum at k");
        ++rep.checked;
        if (!(z(k + 2 * k) == Cyc(1))) fail("diagonal triple at k"); // c_{k,k,k}
    }
    for (long k1 = k_min; k1 <= k_max; ++k1)
        for (long k2 = k_min; k2 <= k_max; ++k2) {
            ++rep.checked;
            Cyc lhs = b(k1 - k2, k2) + b(k2, k1 - k2);
            Cyc rhs = (((k1 % 3) + 3) % 3 == 0) ? Cyc(3) * two_cos(k2) : Cyc(0);
            if (!(lhs == rhs)) fail("reflected pair sum");
        }
    for (long k1 = k_min; k1 <= k_max; ++k1)
        for (long k2 = k_min; k2 <= k_max; ++k2)
            for (long k3 = k_min; k3 <= k_max; ++k3) {
                ++rep.checked;
                long n1 = k1 - k2 - k3, n2 = k2, n3 = k3;
                // all six placements of the triple exponent n_a + 2 n_b
                Cyc lhs = z(n1 + 2 * n2) + z(n1 + 2 * n3) + z(n2 + 2 * n1) +
                          z(n2 + 2 * n3) + z(n3 + 2 * n1) + z(n3 + 2 * n2);
                Cyc rhs = (((k1 % 3) + 3) % 3 == 0) ? Cyc(3) * two_cos(k2 + 2 * k3) : Cyc(0);
                if (!(lhs == rhs)) fail("symmetrized triple sum");
            }
    return rep;
}

// Coefficients of (u3 - u1)/(u2 - u1) in powers of Q^{1/3} t3, exact over
// Q(zeta3). The partition-polynomial route inverts the denominator through
// C_{m,-1}; cross_ratio_division is the plain long-division oracle.
inline Series<Cyc> cross_ratio_numden(const CanonicalSeries &cs, int N, bool numerator) {
    // branch exponents (0, 2, 1) for labels (u1, u2, u3)
    int k = numerator ? 1 : 2; // u3 - u1 : u2 - u1
    Series<Cyc> s(N);
    for (int n = 1; n <= N + 1; ++n) {
        if (n > cs.N) break;
        Cyc a(cs.A[n - 1]);
        if (n - 1 <= N) s.c[n - 1] = a * (Cyc::zeta3_pow((long)n * k) - Cyc(1));
    }
    return s;
}

inline Series<Cyc> cross_ratio_series(const CanonicalSeries &cs, int N) {
    if (N + 1 > cs.N) throw std::invalid_argument("cross_ratio_series: need cs.N > N");
    if (cs.A[0] == 0) throw std::domain_error("cross_ratio_series: equal leading branch coefficients");
    Series<Cyc> num = cross_ratio_numden(cs, N, true);
    Series<Cyc> den = cross_ratio_numden(cs, N, false);
    Cyc d0 = den.c[0];
    // normalize to leading 1, expand the inverse by the partition polynomials
    Series<Cyc> dn(N);
    for (int n = 0; n <= N; ++n) dn.c[n] = den.c[n] / d0;
    Series<Cyc> inv = reciprocal_via_potential(dn);
    Series<Cyc> scaled(N);
    for (int n = 0; n <= N; ++n) scaled.c[n] = num.c[n] / d0;
    return scaled * inv;
}

inline Series<Cyc> cross_ratio_division(const CanonicalSeries &cs, int N) {
    if (N + 1 > cs.N) throw std::invalid_argument("cross_ratio_division: need cs.N > N");
    if (cs.A[0] == 0) throw std::domain_error("cross_ratio_division: equal leading branch coefficients");
    return cross_ratio_numden(cs, N, true) * reciprocal(cross_ratio_numden(cs, N, false));
}

} // namespace lgqc
