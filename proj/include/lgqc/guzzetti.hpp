#pragma once

// The Painleve-VI side of the correspondence: the antisymmetric-frame ODE
// around the equianharmonic point x = e^{-pi i/3}, the eigenvector-matrix
// parameterization, the flat coordinates (t1, Q, t3) as series in
// s = x - e^{-pi i/3} with H-prefactors, the composed map Q^{1/3} t3 (x),
// and its further composition with the modular lambda function at
// rho = e^{2 pi i/3}.
//
// Everything on the x-side is exact over Q(zeta12); only the lambda-side
// Taylor data (Gamma(1/3) territory) is numeric.

#include "lgqc/cyclotomic.hpp"
#include "lgqc/modular.hpp"
#include "lgqc/series.hpp"

namespace lgqc {

namespace guz {

// base point x0 = e^{-pi i/3} = -zeta3 and the ODE seed values +-i/sqrt(3);
// the literature prints the seed as +-i sqrt(3)/2, but the eigenvalue frame
// (V has spectrum {-1, 0, 1}) forces |Omega_k|^2 = 1/3, and only the 1/sqrt(3)
// seed reproduces the printed order-1 and order-2 coefficients. See the tests
// for the cross-module derivation of the seed from the transition matrix.
inline Cyc12 x0() { return Cyc12(-Cyc::omega()); }
inline Cyc12 i_over_sqrt3() { return Cyc12(Cyc(Rat(1, 3), Rat(2, 3))); } // i sqrt(3)/3

// Q = q_lead * H^3 + O(s): the H^3-anchored constant. Derived exactly from
// u_k = t1 + 3 Q^{1/3} zeta3^k with the labels that put the cross ratio at
// e^{-pi i/3}: Q/H^3 = 1/(27 (zeta3^2 - 1)^3) = i sqrt(3)/243. The printed
// value "i sqrt(3)/143" garbles the denominator.
inline Cyc12 q_lead_derived() { return Cyc12(Cyc(Rat(1, 243), Rat(2, 243))); }

// cube root of q_lead on the branch that gives t3 = (-9s + ...) H^{-1}:
// -1/6 + i sqrt(3)/18, still in Q(zeta12).
inline Cyc12 q_lead_cbrt() { return Cyc12(Cyc(Rat(-1, 9), Rat(1, 9))); }

} // namespace guz

struct OmegaSeries {
    int N = 0;
    Series<Cyc12> o1, o2, o3; // coefficients in s = x - e^{-pi i/3}
};

namespace guz {

inline Series<Cyc12> x_series(int N) {
    Series<Cyc12> x(N);
    x.c[0] = x0();
    if (N >= 1) x.c[1] = Cyc12(1);
    return x;
}

} // namespace guz

// dO1/dx = O2 O3 / x,  dO2/dx = O1 O3 / (1-x),  dO3/dx = O1 O2 / (x(x-1)),
// regular at the base point; the order-0 data determines everything.
inline OmegaSeries omega_extend(int N) {
    if (N < 0 || N > 40) throw std::invalid_argument("omega_extend: N out of range");
    OmegaSeries om;
    om.N = N;
    om.o1 = Series<Cyc12>(N);
    om.o2 = Series<Cyc12>(N);
    om.o3 = Series<Cyc12>(N);
    om.o1.c[0] = -guz::i_over_sqrt3();
    om.o2.c[0] = guz::i_over_sqrt3();
    om.o3.c[0] = guz::i_over_sqrt3();
    Series<Cyc12> x = guz::x_series(N);
    Series<Cyc12> one = Series<Cyc12>::constant(N, Cyc12(1));
    Series<Cyc12> invx = reciprocal(x);
    Series<Cyc12> inv1mx = reciprocal(one - x);
    Series<Cyc12> invxxm1 = -(invx * inv1mx); // 1/(x(x-1))
    for (int n = 0; n < N; ++n) {
        Cyc12 d = Cyc12(n + 1);
        om.o1.c[n + 1] = (om.o2 * om.o3 * invx).c[n] / d;
        om.o2.c[n + 1] = (om.o1 * om.o3 * inv1mx).c[n] / d;
        om.o3.c[n + 1] = (om.o1 * om.o2 * invxxm1).c[n] / d;
    }
    return om;
}

// same recursion, hand-rolled convolutions; kept as an independent coding and
// compared exactly against omega_extend in the tests.
inline OmegaSeries omega_extend_conv(int N) {
    if (N < 0 || N > 40) throw std::invalid_argument("omega_extend_conv: N out of range");
    std::vector<Cyc12> o1(N + 1), o2(N + 1), o3(N + 1), ix(N + 1), i1(N + 1), ixx(N + 1);
    o1[0] = -guz::i_over_sqrt3();
    o2[0] = guz::i_over_sqrt3();
    o3[0] = guz::i_over_sqrt3();
    // geometric series for 1/x and 1/(1-x) around x0
    Cyc12 x0 = guz::x0();
    Cyc12 ax = Cyc12(1) / x0, a1 = Cyc12(1) / (Cyc12(1) - x0);
    Cyc12 px = ax, p1 = a1;
    for (int k = 0; k <= N; ++k) {
        ix[k] = px;
        i1[k] = p1;
        px = -px / x0; // next (-1)^k / x0^{k+1}
        p1 = p1 / (Cyc12(1) - x0);
    }
    for (int k = 0; k <= N; ++k) {
        Cyc12 s;
        for (int j = 0; j <= k; ++j) s = s + ix[j] * i1[k - j];
        ixx[k] = -s;
    }
    auto conv3 = [&](const std::vector<Cyc12> &a, const std::vector<Cyc12> &b,
                     const std::vector<Cyc12> &w, int n) {
        Cyc12 acc;
        for (int j = 0; j <= n; ++j) {
            Cyc12 ab;
            for (int k = 0; k <= j; ++k) ab = ab + a[k] * b[j - k];
            acc = acc + ab * w[n - j];
        }
        return acc;
    };
    for (int n = 0; n < N; ++n) {
        Cyc12 d = Cyc12(n + 1);
        o1[n + 1] = conv3(o2, o3, ix, n) / d;
        o2[n + 1] = conv3(o1, o3, i1, n) / d;
        o3[n + 1] = conv3(o1, o2, ixx, n) / d;
    }
    OmegaSeries om;
    om.N = N;
    om.o1 = Series<Cyc12>(N, o1);
    om.o2 = Series<Cyc12>(N, o2);
    om.o3 = Series<Cyc12>(N, o3);
    return om;
}

struct GuzzettiMap {
    int N = 0;
    int mu = 0;               // selected candidate from {-1, +1}
    bool gauge_flipped = false; // (O1, O2) -> (-O1, -O2): third-row sign of Psi
    Series<Cyc12> a, b, c;    // t1 = u1 + a(x) H,  t3 = -9 c/(b^2 H)
    Series<Cyc12> t3H;        // t3 * H
    Series<Cyc12> q_pref;     // Q / H^3
    Series<Cyc12> t2_tail;    // t2 - 3 log H - log(q_lead); zero constant term
    Series<Cyc12> qt3x;       // Q^{1/3} t3 as a series in s
    std::vector<cplx> xz;     // Taylor coefficients x_m of lambda at rho
    std::vector<cplx> qt3z;   // composed coefficients in (z - rho)
};

inline bool q_lead_cbrt_check() {
    Cyc12 p = guz::q_lead_cbrt();
    return p * p * p == guz::q_lead_derived();
}

// Eigenvector-matrix entries and Guzzetti's a, b, c; the normalization f(u)
// cancels from every product used here and is never computed. mu is the
// spectral parameter candidate; the (O1, O2) sign gauge is scanned because the
// printed antisymmetric frame and the printed a(x) fix opposite third-row
// signs. A candidate that leaves b(0) = 0 or misses the flat-coordinate
// anchor a(0) = 1/2 - i sqrt(3)/6 is rejected.
inline GuzzettiMap flat_from_canonical(const OmegaSeries &om, int mu) {
    if (mu != 1 && mu != -1) throw std::invalid_argument("flat_from_canonical: mu candidate");
    if (!(q_lead_cbrt_check())) throw std::logic_error("flat_from_canonical: prefactor");
    int N = om.N;
    Series<Cyc12> x = guz::x_series(N);
    Cyc12 imu = Cyc12::i() * Cyc12(mu);  // 1/(i mu) = -i mu since mu^2 = 1
    Cyc12 a0_target = Cyc12(Cyc(Rat(1, 3), Rat(-1, 3))); // 1/2 - i sqrt(3)/6
    for (int gauge : {0, 1}) {
        Series<Cyc12> o1 = gauge ? -om.o1 : om.o1;
        Series<Cyc12> o2 = gauge ? -om.o2 : om.o2;
        const Series<Cyc12> &o3 = om.o3;
        Series<Cyc12> sq = o1 * o1 + o3 * o3;
        Series<Cyc12> E21 = Cyc12(Cyc(Rat(-1, 2))) * sq;
        Series<Cyc12> E22 = -imu * o2;
        Series<Cyc12> E31 = Cyc12(Cyc(Rat(1, 2))) * (o2 * o3 + Cyc12(mu) * o1);
        Series<Cyc12> E32 = -imu * o3;
        Series<Cyc12> E33 = -((o2 * o3 - Cyc12(mu) * o3) * reciprocal(sq));
        Series<Cyc12> a = E21 + x * E31 * E33; // E23 = 1
        Series<Cyc12> b = E22 * E21 + x * E32 * E31;
        Series<Cyc12> c = E21 * E21 + x * E31 * E31;
        if (b.c[0].is_zero()) continue;
        if (!(a.c[0] == a0_target)) continue;
        GuzzettiMap gm;
        gm.N = N;
        gm.mu = mu;
        gm.gauge_flipped = gauge != 0;
        gm.a = a;
        gm.b = b;
        gm.c = c;
        gm.t3H = Cyc12(-9) * (c * reciprocal(b * b));
        Series<Cyc12> g = reciprocal(x + (E21 * E22) * reciprocal(E31 * E32));
        gm.t2_tail = Cyc12(3) * g.antiderivative();
        Series<Cyc12> e = exp_series(gm.t2_tail);
        gm.q_pref = guz::q_lead_derived() * e;
        gm.qt3x = guz::q_lead_cbrt() * (nth_root_with(e, 3, Cyc12(1)) * gm.t3H);
        return gm;
    }
    throw std::domain_error("flat_from_canonical: mu candidate failed validation");
}

inline Series<Cyc12> qt3_of_x(int N) {
    OmegaSeries om = omega_extend(N);
    // mu = +1 is rejected by the validation; report through the map instead of
    // hard-coding the selection.
    try {
        return flat_from_canonical(om, 1).qt3x;
    } catch (const std::domain_error &) {
        return flat_from_canonical(om, -1).qt3x;
    }
}

inline Series<cplx> to_cplx_series(const Series<Cyc12> &s) {
    Series<cplx> r(s.K);
    for (int n = 0; n <= s.K; ++n) r.c[n] = s.c[n].to_complex();
    return r;
}

// Taylor coefficients x_m of the modular lambda function at rho = e^{2 pi i/3},
// x(z) = sum x_m (z - rho)^m / m!. Seeded by x(rho) = e^{-pi i/3} (the value
// of the lambda function used throughout; the printed special value carries
// the opposite exponent sign) and by the sixth-root relation
//   (x')^6 = -Delta/(16 pi^6) x^4 (x-1)^4,
// which at rho is a positive real number; the branch carries the phase
// e^{i pi/3}, fixed once against a finite-difference oracle and asserted here
// through the positivity of the sixth power. The printed relation scales the
// right-hand side by (2^8/3^3)(2 pi)^{-12} Delta instead; that constant is off
// by -27 pi^6 against the finite-difference oracle. Higher orders come from
// the logarithmic derivative, where every constant cancels:
//   6 x'' = x' (2 pi i E2 + 4 x'/x + 4 x'/(x-1)).
inline std::vector<cplx> x_taylor_at_rho(int N) {
    if (N < 0 || N > 10) throw std::invalid_argument("x_taylor_at_rho: N out of range");
    int K = N;
    TauPoint rho(std::exp(cplx(0, 2 * PI / 3)));
    // Eisenstein jets at rho from the Ramanujan derivatives
    Series<cplx> e2(K), e4(K), e6(K);
    e2.c[0] = 2.0 * std::sqrt(3.0) / PI;
    e4.c[0] = 0.0;
    e6.c[0] = eisenstein_eval(6, rho);
    cplx pii = cplx(0, PI);
    for (int n = 0; n + 1 <= K; ++n) {
        cplx d2 = -e4.c[n], d4 = -e6.c[n], d6 = 0;
        for (int j = 0; j <= n; ++j) {
            d2 += e2.c[j] * e2.c[n - j];
            d4 += e2.c[j] * e4.c[n - j];
            d6 += e2.c[j] * e6.c[n - j] - e4.c[j] * e4.c[n - j];
        }
        e2.c[n + 1] = (pii / 6.0) * d2 / double(n + 1);
        e4.c[n + 1] = (2.0 * pii / 3.0) * d4 / double(n + 1);
        e6.c[n + 1] = pii * d6 / double(n + 1);
    }
    Series<cplx> x(K);
    cplx x0 = guz::x0().to_complex();
    x.c[0] = x0;
    if (K >= 1) {
        cplx delta0 = std::pow(2 * PI, 12.0) * (-e6.c[0] * e6.c[0]) / 1728.0;
        cplx rhs6 = -delta0 / (16.0 * std::pow(PI, 6.0)) * std::pow(x0, 4.0) *
                    std::pow(x0 - 1.0, 4.0);
        if (std::abs(std::arg(rhs6)) > 1e-8)
            throw std::domain_error("x_taylor_at_rho: branch resolution failed");
        x.c[1] = std::pow(rhs6.real(), 1.0 / 6.0) * std::exp(cplx(0, PI / 3));
    }
    Series<cplx> one = Series<cplx>::constant(K, 1.0);
    for (int m = 2; m <= K; ++m) {
        Series<cplx> xp = x.derivative();
        Series<cplx> rhs = xp * (cplx(0, 2 * PI) * e2 + cplx(4) * (xp * reciprocal(x)) +
                                 cplx(4) * (xp * reciprocal(x - one)));
        x.c[m] = rhs.c[m - 2] / (6.0 * double(m) * double(m - 1));
    }
    std::vector<cplx> out(K + 1);
    double f = 1;
    for (int m = 0; m <= K; ++m) {
        out[m] = x.c[m] * f;
        f *= (m + 1);
    }
    return out;
}

// composed coefficients of Q^{1/3} t3 in z - rho via partial Bell polynomials;
// qt3_of_z_direct is the plain Horner substitution used as the cross-check.
inline std::vector<cplx> qt3_of_z(int N) {
    std::vector<cplx> xm = x_taylor_at_rho(N);
    Series<cplx> q = to_cplx_series(qt3_of_x(N));
    Series<cplx> tail(N);
    double f = 1;
    for (int m = 1; m <= N; ++m) {
        f *= m;
        tail.c[m] = xm[m] / f;
    }
    return compose_bell(q, tail).c;
}

inline std::vector<cplx> qt3_of_z_direct(int N) {
    std::vector<cplx> xm = x_taylor_at_rho(N);
    Series<cplx> q = to_cplx_series(qt3_of_x(N));
    Series<cplx> tail(N);
    double f = 1;
    for (int m = 1; m <= N; ++m) {
        f *= m;
        tail.c[m] = xm[m] / f;
    }
    return compose(q, tail).c;
}

// full assembly; the lambda-side orders are capped at 10.
inline GuzzettiMap guzzetti_map(int N) {
    OmegaSeries om = omega_extend(N);
    GuzzettiMap gm;
    try {
        gm = flat_from_canonical(om, 1);
    } catch (const std::domain_error &) {
        gm = flat_from_canonical(om, -1);
    }
    int M = std::min(N, 10);
    gm.xz = x_taylor_at_rho(M);
    Series<cplx> q = to_cplx_series(gm.qt3x).truncated(M);
    Series<cplx> tail(M);
    double f = 1;
    for (int m = 1; m <= M; ++m) {
        f *= m;
        tail.c[m] = gm.xz[m] / f;
    }
    gm.qt3z = compose_bell(q, tail).c;
    return gm;
}

} // namespace lgqc
