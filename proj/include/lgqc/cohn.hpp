#pragma once

// Equianharmonic uniformization of the small superpotential: the hexagonal
// lattice rescaled to g2 = 0, g3 = -1, the (t1, Q) chart it induces, the
// universal covering v(tau) of the punctured plane (pointwise inversion and
// path integration routes), and the Weber-function identities tying gamma2,
// gamma3 to the p-function along the covering.

#include "lgqc/modular.hpp"

#include <cmath>
#include <vector>

namespace lgqc {

// period ratio of the hexagonal lattice Z + zeta6 Z (same lattice as Z + rho Z)
inline TauPoint hex_tau() { return TauPoint(std::exp(cplx(0, PI / 3))); }

// lattice scale nu: nu*(Z + zeta6 Z) carries g2 = 0, g3 = -1, so that
// (p')^2 = 4 p^3 + 1 and the half-period values obey 4 e^3 = -1
inline cplx cohn_nu() {
    static const cplx nu = [] {
        cplx g3 = g3_of(hex_tau()); // positive real; g2 vanishes identically here
        return std::pow(-g3, 1.0 / 6.0);
    }();
    return nu;
}

// p and p' in the normalized chart; v lives on the scaled lattice nu*(Z+zeta6 Z)
inline cplx cohn_p(cplx v) {
    cplx nu = cohn_nu();
    return wp_pair(v / nu, hex_tau(), 1e-14).p / (nu * nu);
}
inline cplx cohn_dp(cplx v) {
    cplx nu = cohn_nu();
    return wp_pair(v / nu, hex_tau(), 1e-14).dp / (nu * nu * nu);
}

// distance of v (scaled chart) to the lattice nu*(Z + zeta6 Z); the covering
// v(tau) is only defined up to deck transformations v -> +-v + lattice
inline double lattice_distance(cplx v) {
    cplx w = v / cohn_nu();
    cplx z6 = std::exp(cplx(0, PI / 3));
    double b = w.imag() / z6.imag();
    double a = w.real() - b * z6.real();
    a -= std::round(a);
    b -= std::round(b);
    double best = 1e300;
    for (int dm = -1; dm <= 1; ++dm)
        for (int dn = -1; dn <= 1; ++dn)
            best = std::min(best, std::abs((a + dm) + (b + dn) * z6));
    return best * std::abs(cohn_nu());
}

inline double deck_distance(cplx v1, cplx v2) {
    return std::min(lattice_distance(v1 - v2), lattice_distance(v1 + v2));
}

// distance of v (scaled chart) to the half-lattice nu*(Z/2 + zeta6 Z/2)
inline double half_lattice_distance(cplx v) {
    cplx w = v / cohn_nu();
    cplx z6 = std::exp(cplx(0, PI / 3));
    double b = w.imag() / z6.imag();
    double a = w.real() - b * z6.real();
    double da = 2.0 * a - std::round(2.0 * a), db = 2.0 * b - std::round(2.0 * b);
    return 0.5 * std::abs(da + db * z6);
}

struct EquianharmonicChart {
    cplx v0;    // base point, off the scaled half-lattice
    cplx omega; // nonzero scale
    EquianharmonicChart(cplx v0_, cplx omega_) : v0(v0_), omega(omega_) {
        if (omega == 0.0) throw std::invalid_argument("EquianharmonicChart: omega = 0");
    }
};

struct SmallUniformization {
    cplx t1, Q;
};

inline SmallUniformization uniformize_small(const EquianharmonicChart &chart) {
    if (half_lattice_distance(chart.v0) < 1e-6)
        throw std::domain_error("uniformize_small: v0 on the half-lattice (degenerate discriminant)");
    cplx two_omega = 2.0 * chart.omega;
    cplx w6 = std::pow(two_omega, 6.0);
    SmallUniformization s;
    s.t1 = -cohn_p(chart.v0) / (two_omega * two_omega);
    s.Q = -1.0 / (27.0 * 4.0 * w6);
    return s;
}

// the one-parameter family of superpotentials attached to the chart
inline cplx small_family_lambda(cplx v, const EquianharmonicChart &chart) {
    cplx two_omega = 2.0 * chart.omega;
    return (cohn_p(v) - cohn_p(chart.v0)) / (two_omega * two_omega);
}

// invert cohn_p: coarse seed over the fundamental cell, then damped Newton
inline cplx invert_cohn_p(cplx y) {
    cplx nu = cohn_nu();
    cplx target = y * nu * nu; // unscaled lattice value
    TauPoint t6 = hex_tau();
    cplx z6 = std::exp(cplx(0, PI / 3));
    cplx best = 0;
    double bestd = 1e300;
    for (int ia = 0; ia < 12; ++ia)
        for (int ib = 0; ib < 12; ++ib) {
            cplx u = (0.04 + 0.92 * ia / 11.0) + (0.04 + 0.92 * ib / 11.0) * z6;
            try {
                double d = std::abs(wp_pair(u, t6).p - target);
                if (d < bestd) { bestd = d; best = u; }
            } catch (const std::exception &) {}
        }
    cplx u = best;
    double res = bestd;
    for (int it = 0; it < 100 && res > 1e-15 * std::max(1.0, std::abs(target)); ++it) {
        auto w = wp_pair(u, t6, 1e-14);
        cplx step = (w.p - target) / w.dp;
        double damp = 1.0;
        for (int h = 0; h < 25; ++h) {
            cplx un = u - damp * step;
            try {
                double rn = std::abs(wp_pair(un, t6, 1e-14).p - target);
                if (rn < res) { u = un; res = rn; break; }
            } catch (const std::exception &) {}
            damp *= 0.5;
        }
        if (damp < 1e-7) break;
    }
    if (res > 1e-8 * std::max(1.0, std::abs(target)))
        throw std::runtime_error("invert_cohn_p: Newton failed to converge");
    return nu * u;
}

// d(p-target)/dtau over p'(v): analytic derivative of the covering
inline cplx covering_derivative(const TauPoint &tp, cplx v) {
    cplx e6 = eisenstein_eval(6, tp);
    cplx eta8 = std::pow(eta_eval(tp), 8.0);
    cplx dp_target = cplx(0, 2 * PI) * e6 / (9.0 * std::pow(4.0, 4.0 / 3.0) * eta8);
    return dp_target / cohn_dp(v);
}

// Pointwise route: p(v) = -gamma2/(3*4^{4/3}) (the cube root of -J/4 forced by
// gamma2^3 = 1728 J), sign of v fixed by the derivative identity
// i*gamma3 = 3^{3/2} 4^{3/2} p'(v).
inline cplx v_of_tau_pointwise(const TauPoint &tp) {
    auto fam = j_family(tp);
    cplx ptarget = -fam.gamma2 / (3.0 * std::pow(4.0, 4.0 / 3.0));
    cplx v = invert_cohn_p(ptarget);
    cplx want = cplx(0, 1) * fam.gamma3 / (std::pow(3.0, 1.5) * 8.0);
    if (std::abs(cohn_dp(v) - want) > std::abs(-cohn_dp(v) - want)) v = -v;
    return v;
}

// (v')^6 = c^6 Delta with Delta = (2 pi)^12 eta^24; the chart normalization
// contributes c^6 = 4/(27 (2 pi)^6)
inline double covering_c6() { return 4.0 / (27.0 * std::pow(2 * PI, 6.0)); }

struct CoveringPath {
    cplx tau_base, v_base;
    std::vector<cplx> taus, vs;
    std::vector<int> branch; // chosen sixth-root sector per accepted step
};

inline CoveringPath covering_path_start(const TauPoint &base) {
    CoveringPath p;
    p.tau_base = base.tau;
    p.v_base = v_of_tau_pointwise(base);
    p.taus = {base.tau};
    p.vs = {p.v_base};
    return p;
}

// extend the path to tau_target by integrating v' = c Delta^{1/6} along the
// straight segment; the sixth root is continued from the previous step
inline cplx v_of_tau_path(CoveringPath &path, cplx tau_target, int min_steps = 64) {
    cplx tau0 = path.taus.back(), v = path.vs.back();
    cplx dtau = tau_target - tau0;
    int N = std::max(min_steps, (int)(std::abs(dtau) * 160));
    cplx wprev = covering_derivative(TauPoint(tau0), v); // seeds the branch
    auto rhs = [&](cplx tau, cplx wnear) {
        cplx d6 = std::pow(covering_c6(), 1.0 / 6.0) *
                  std::pow(eta_delta(TauPoint(tau)).delta_E, 1.0 / 6.0);
        cplx bestw = d6;
        int bestk = 0;
        for (int k = 1; k < 6; ++k) {
            cplx cand = d6 * std::exp(cplx(0, PI * k / 3.0));
            if (std::abs(cand - wnear) < std::abs(bestw - wnear)) { bestw = cand; bestk = k; }
        }
        return std::pair<cplx, int>(bestw, bestk);
    };
    for (int s = 0; s < N; ++s) {
        cplx h = dtau / (double)N;
        cplx t = tau0 + h * (double)s;
        // RK4 with branch continuity against the running derivative
        auto [k1, b1] = rhs(t, wprev);
        auto [k2, b2] = rhs(t + 0.5 * h, k1);
        auto [k3, b3] = rhs(t + 0.5 * h, k2);
        auto [k4, b4] = rhs(t + h, k3);
        v += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
        wprev = k4;
        path.branch.push_back(b1);
        path.taus.push_back(t + h);
        path.vs.push_back(v);
    }
    return v;
}

struct WeberReport {
    double gamma2_minus = 0;   // |gamma2 + 3*4^{4/3} p(v)|  (consistent sign)
    double gamma2_printed = 0; // |gamma2 - 3*4^{4/3} p(v)|  (sign as printed)
    double gamma3_i = 0;       // |i gamma3 - 3^{3/2} 4^{3/2} p'(v)|
    double gamma3_printed = 0; // |gamma3 - 3^{3/2} 4^{3/2} p'(v)|
    double cube_square = 0;    // |gamma2^3 - gamma3^2 - 1728|
};

inline WeberReport weber_wp_check(const TauPoint &tp) {
    auto fam = j_family(tp);
    cplx v = v_of_tau_pointwise(tp);
    cplx p = cohn_p(v), dp = cohn_dp(v);
    double c2 = 3.0 * std::pow(4.0, 4.0 / 3.0);
    double c3 = std::pow(3.0, 1.5) * 8.0;
    WeberReport r;
    r.gamma2_minus = std::abs(fam.gamma2 + c2 * p);
    r.gamma2_printed = std::abs(fam.gamma2 - c2 * p);
    r.gamma3_i = std::abs(cplx(0, 1) * fam.gamma3 - c3 * dp);
    r.gamma3_printed = std::abs(fam.gamma3 - c3 * dp);
    r.cube_square = std::abs(fam.gamma2 * fam.gamma2 * fam.gamma2 -
                             fam.gamma3 * fam.gamma3 - 1728.0);
    return r;
}

} // namespace lgqc
