#pragma once

// Numeric modular/elliptic functions on the upper half-plane (Eisenstein
// series, eta, discriminant, j and its Weber roots, Weierstrass p, modular
// lambda) and the exact quasi-modular ring C[E2,E4,E6] with its q d/dq
// derivative.
//
// Branch policy: gamma2 = E4/eta^8 and gamma3 = E6/eta^12 with
// q^{1/3} = e^{2 pi i tau/3}, q^{1/24} = e^{2 pi i tau/24}. These are
// single-valued on the half-plane and real-positive (resp. real) on the
// imaginary axis, which is exactly the continuation the cube/square-root
// definitions require; no pointwise principal roots anywhere.

#include "lgqc/numeric.hpp"
#include "lgqc/series.hpp"

#include <array>
#include <map>
#include <mutex>

namespace lgqc {

struct TauPoint {
    cplx tau;
    explicit TauPoint(cplx t, double min_im = 0.05) : tau(t) {
        if (t.imag() < min_im) throw std::invalid_argument("TauPoint: Im tau too small");
    }
    cplx q() const { return std::exp(cplx(0, 2 * PI) * tau); }
};

namespace detail {
// sigma_k(n) divisor sums, cached per k
inline const std::vector<Int> &sigma_table(int k, std::size_t M) {
    static std::map<int, std::vector<Int>> tab;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto &v = tab[k];
    if (v.size() < M + 1) {
        std::size_t old = v.size();
        v.resize(M + 1, Int(0));
        if (old == 0) old = 1;
        // recompute fully (cheap enough) to keep the sieve simple
        std::fill(v.begin(), v.end(), Int(0));
        for (std::size_t d = 1; d <= M; ++d) {
            Int dk = 1;
            for (int t = 0; t < k; ++t) dk *= (long)d;
            for (std::size_t n = d; n <= M; n += d) v[n] += dk;
        }
    }
    return v;
}
} // namespace detail

// q-expansion coefficients (integer) of E_k, k in {2,4,6}, up to q^M
inline std::vector<Int> eisenstein_qexp(int k, std::size_t M) {
    long c = k == 2 ? -24 : k == 4 ? 240 : k == 6 ? -504 : 0;
    if (c == 0) throw std::invalid_argument("eisenstein_qexp: k not in {2,4,6}");
    const auto &sig = detail::sigma_table(k - 1, M);
    std::vector<Int> a(M + 1);
    a[0] = 1;
    for (std::size_t n = 1; n <= M; ++n) a[n] = Int(c) * sig[n];
    return a;
}

inline cplx eisenstein_eval(int k, const TauPoint &tp, double tol = 1e-14) {
    cplx q = tp.q();
    double aq = std::abs(q);
    // tail of |c| sigma_{k-1}(n)|q|^n bounded by |c| n^k |q|^n; pick M
    std::size_t M = 16;
    while (M < 1000000) {
        double tail = 504.0 * std::pow((double)M, k) * std::pow(aq, (double)M) / (1 - aq);
        if (tail < tol) break;
        M *= 2;
    }
    if (M >= 1000000) throw std::runtime_error("eisenstein_eval: tol unreachable");
    auto a = eisenstein_qexp(k, M);
    cplx acc = 0;
    for (std::size_t n = M; n > 0; --n) acc = (acc + cplx(a[n].convert_to<double>(), 0)) * q;
    return acc + 1.0;
}

// Dedekind eta by the pentagonal-number series, q^{1/24} = e^{2 pi i tau/24}
inline cplx eta_eval(const TauPoint &tp, double tol = 1e-14) {
    cplx q = tp.q();
    cplx s = 0;
    for (long k = -64; k <= 64; ++k) {
        long e = k * (3 * k - 1) / 2;
        cplx term = std::pow(q, (double)e);
        if (k != 0 && std::abs(term) < tol * 1e-3 && std::abs(k) > 3) continue;
        s += (k % 2 == 0 ? 1.0 : -1.0) * term;
    }
    return std::exp(cplx(0, 2 * PI) * tp.tau / 24.0) * s;
}

struct EtaDelta {
    cplx eta, delta_eta, delta_E;
};

inline EtaDelta eta_delta(const TauPoint &tp, double tol = 1e-14) {
    EtaDelta r;
    r.eta = eta_eval(tp, tol);
    cplx twopi12 = std::pow(2 * PI, 12.0);
    r.delta_eta = twopi12 * std::pow(r.eta, 24.0);
    cplx e4 = eisenstein_eval(4, tp, tol), e6 = eisenstein_eval(6, tp, tol);
    r.delta_E = twopi12 * (e4 * e4 * e4 - e6 * e6) / 1728.0;
    return r;
}

struct JFamily {
    cplx j, J, gamma2, gamma3;
};

inline JFamily j_family(const TauPoint &tp, double tol = 1e-14) {
    cplx e4 = eisenstein_eval(4, tp, tol), e6 = eisenstein_eval(6, tp, tol);
    cplx eta = eta_eval(tp, tol);
    JFamily r;
    // eta^24 route for the discriminant: the E4^3 - E6^2 difference cancels
    // catastrophically at small Im tau
    cplx d = std::pow(eta, 24.0);
    r.j = e4 * e4 * e4 / d;
    r.J = r.j / 1728.0;
    r.gamma2 = e4 / std::pow(eta, 8.0);
    r.gamma3 = e6 / std::pow(eta, 12.0);
    return r;
}

// ---- Weierstrass p for the lattice Z + tau Z, q-series route ----

struct WpPair {
    cplx p, dp;
};

inline WpPair wp_pair(cplx v, const TauPoint &tp, double tol = 1e-12) {
    cplx tau = tp.tau;
    // reduce v = a + b tau, a,b in [-1/2,1/2)
    double b = v.imag() / tau.imag();
    double a = v.real() - b * tau.real();
    b -= std::round(b);
    a -= std::round(a);
    cplx vr = a + b * tau;
    // pole proximity (nearest lattice point of the reduced representative)
    double dist = std::abs(vr);
    for (int dm = -1; dm <= 1; ++dm)
        for (int dn = -1; dn <= 1; ++dn)
            dist = std::min(dist, std::abs(vr - (double)dm - (double)dn * tau));
    if (dist < 1e-8) throw std::domain_error("wp_pair: v on the lattice");

    cplx q = tp.q();
    cplx u = std::exp(cplx(0, 2 * PI) * vr);
    cplx twopii(0, 2 * PI);
    cplx one = 1.0;
    cplx P = 1.0 / 12.0 + u / ((one - u) * (one - u));
    cplx DP = u * (one + u) / std::pow(one - u, 3.0);
    double aq = std::abs(q);
    cplx qn = 1.0;
    for (int n = 1; n < 4000; ++n) {
        qn *= q;
        cplx t1 = qn * u / ((one - qn * u) * (one - qn * u));
        cplx t2 = (qn / u) / ((one - qn / u) * (one - qn / u));
        cplx t3 = qn / ((one - qn) * (one - qn));
        P += t1 + t2 - 2.0 * t3;
        cplx d1 = qn * u * (one + qn * u) / std::pow(one - qn * u, 3.0);
        cplx d2 = (qn / u) * (one + qn / u) / std::pow(one - qn / u, 3.0);
        DP += d1 - d2;
        if (std::pow(aq, n) * std::max(1.0, std::abs(u) + 1.0 / std::abs(u)) < tol * 1e-2) break;
    }
    WpPair r;
    r.p = twopii * twopii * P;
    r.dp = twopii * twopii * twopii * DP;
    return r;
}

inline cplx g2_of(const TauPoint &tp, double tol = 1e-14) {
    return (4.0 * std::pow(PI, 4.0) / 3.0) * eisenstein_eval(4, tp, tol);
}
inline cplx g3_of(const TauPoint &tp, double tol = 1e-14) {
    return (8.0 * std::pow(PI, 6.0) / 27.0) * eisenstein_eval(6, tp, tol);
}

// slow lattice-sum oracle for g2, g3 (tests only)
inline cplx eisenstein_lattice_sum(int k, cplx tau, int R) {
    cplx s = 0;
    for (int m = -R; m <= R; ++m)
        for (int n = -R; n <= R; ++n) {
            if (m == 0 && n == 0) continue;
            s += std::pow((double)m + (double)n * tau, -(double)k);
        }
    return s;
}

// modular lambda x(tau) = (p((1+tau)/2) - p(tau/2)) / (p(1/2) - p(tau/2))
inline cplx modular_lambda(const TauPoint &tp, double tol = 1e-12) {
    cplx tau = tp.tau;
    cplx e1 = wp_pair(0.5, tp, tol).p;
    cplx e2 = wp_pair((1.0 + tau) / 2.0, tp, tol).p;
    cplx e3 = wp_pair(tau / 2.0, tp, tol).p;
    return (e2 - e3) / (e1 - e3);
}

// ---- exact quasi-modular ring C[E2,E4,E6] ----

struct QMF {
    // monomial exponents (a,b,c) for E2^a E4^b E6^c -> rational coefficient
    std::map<std::array<int, 3>, Rat> m;

    QMF() = default;
    static QMF mono(int a, int b, int c, Rat coef = Rat(1)) {
        QMF f;
        if (coef != 0) f.m[{a, b, c}] = coef;
        return f;
    }
    static QMF E2() { return mono(1, 0, 0); }
    static QMF E4() { return mono(0, 1, 0); }
    static QMF E6() { return mono(0, 0, 1); }
    static QMF one() { return mono(0, 0, 0); }

    void clean() {
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
    }
    bool is_zero() const { return m.empty(); }

    // weight of a monomial; -1 if mixed weights
    int weight() const {
        int w = -1;
        for (auto &[e, c] : m) {
            int we = 2 * e[0] + 4 * e[1] + 6 * e[2];
            if (w == -1) w = we;
            else if (w != we) return -1;
        }
        return w;
    }

    friend QMF operator+(const QMF &x, const QMF &y) {
        QMF r = x;
        for (auto &[e, c] : y.m) r.m[e] += c;
        r.clean();
        return r;
    }
    friend QMF operator-(const QMF &x, const QMF &y) {
        QMF r = x;
        for (auto &[e, c] : y.m) r.m[e] -= c;
        r.clean();
        return r;
    }
    friend QMF operator*(const QMF &x, const QMF &y) {
        QMF r;
        for (auto &[e1, c1] : x.m)
            for (auto &[e2, c2] : y.m)
                r.m[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
        r.clean();
        return r;
    }
    friend QMF operator*(const Rat &a, const QMF &x) {
        QMF r = x;
        for (auto &[e, c] : r.m) c *= a;
        r.clean();
        return r;
    }
    friend bool operator==(const QMF &x, const QMF &y) { return (x - y).is_zero(); }

    cplx eval(const TauPoint &tp, double tol = 1e-14) const {
        cplx e2 = eisenstein_eval(2, tp, tol), e4 = eisenstein_eval(4, tp, tol),
             e6 = eisenstein_eval(6, tp, tol);
        cplx acc = 0;
        for (auto &[e, c] : m)
            acc += to_double(c) * std::pow(e2, (double)e[0]) * std::pow(e4, (double)e[1]) *
                   std::pow(e6, (double)e[2]);
        return acc;
    }
};

// D = q d/dq on the generators, extended as a derivation:
// D E2 = (E2^2-E4)/12, D E4 = (E2 E4-E6)/3, D E6 = (E2 E6-E4^2)/2
inline QMF ramanujan_derive(const QMF &f) {
    QMF r;
    const QMF dE2 = Rat(1, 12) * (QMF::E2() * QMF::E2() - QMF::E4());
    const QMF dE4 = Rat(1, 3) * (QMF::E2() * QMF::E4() - QMF::E6());
    const QMF dE6 = Rat(1, 2) * (QMF::E2() * QMF::E6() - QMF::E4() * QMF::E4());
    for (auto &[e, c] : f.m) {
        QMF base = QMF::mono(e[0], e[1], e[2], c);
        if (e[0] > 0)
            r = r + Rat(e[0]) * (QMF::mono(e[0] - 1, e[1], e[2], c) * dE2);
        if (e[1] > 0)
            r = r + Rat(e[1]) * (QMF::mono(e[0], e[1] - 1, e[2], c) * dE4);
        if (e[2] > 0)
            r = r + Rat(e[2]) * (QMF::mono(e[0], e[1], e[2] - 1, c) * dE6);
    }
    r.clean();
    return r;
}

// d/dtau = 2 pi i q d/dq, numeric entry point
inline cplx dtau_eval(const QMF &f, const TauPoint &tp, double tol = 1e-14) {
    return cplx(0, 2 * PI) * ramanujan_derive(f).eval(tp, tol);
}

} // namespace lgqc
