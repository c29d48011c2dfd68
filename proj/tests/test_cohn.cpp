#include <catch2/catch_amalgamated.hpp>

#include "lgqc/cohn.hpp"

using namespace lgqc;

TEST_CASE("normalized hexagonal p-function: g2 = 0, g3 = -1", "[cohn]") {
    cplx nu = cohn_nu();
    for (cplx v : {cplx(0.31, 0.22) * nu, cplx(0.12, 0.61) * nu, cplx(0.77, 0.18) * nu}) {
        cplx p = cohn_p(v), dp = cohn_dp(v);
        CHECK(std::abs(dp * dp - (4.0 * p * p * p + 1.0)) < 1e-12);
    }
    // half-period values solve 4 e^3 = -1
    cplx z6 = std::exp(cplx(0, PI / 3));
    for (cplx h : {cplx(0.5), 0.5 * z6, 0.5 * (1.0 + z6)}) {
        cplx e = cohn_p(nu * h);
        CHECK(std::abs(4.0 * e * e * e + 1.0) < 1e-9);
        CHECK(std::abs(cohn_dp(nu * h)) < 1e-9);
    }
    CHECK(half_lattice_distance(nu * 0.5) < 1e-14);
    CHECK(half_lattice_distance(nu * cplx(0.31, 0.17)) > 0.1);
}

TEST_CASE("chart to (t1, Q): discriminant identity and superpotential family", "[cohn]") {
    cplx nu = cohn_nu();
    EquianharmonicChart chart(nu * cplx(0.31, 0.17), cplx(0.8, 0.1));
    auto s = uniformize_small(chart);
    cplx w6 = std::pow(2.0 * chart.omega, 6.0);
    cplx dp0 = cohn_dp(chart.v0);
    CHECK(std::abs(s.t1 * s.t1 * s.t1 + 27.0 * s.Q + dp0 * dp0 / (4.0 * w6)) < 1e-9);
    // the family member at the base point has a zero there
    CHECK(std::abs(small_family_lambda(chart.v0, chart)) < 1e-12);
    // periodicity in v
    cplx v = chart.v0 + 0.3 * nu;
    CHECK(std::abs(small_family_lambda(v + nu, chart) - small_family_lambda(v, chart)) < 1e-12);
    // real positive omega gives real negative Q
    auto sr = uniformize_small(EquianharmonicChart(nu * cplx(0.31, 0.17), 0.9));
    CHECK(sr.Q.real() < 0);
    CHECK(std::abs(sr.Q.imag()) < 1e-15);
    // degenerate base points reject
    CHECK_THROWS(uniformize_small(EquianharmonicChart(0.5 * nu, 1.0)));
    CHECK_THROWS(EquianharmonicChart(nu * cplx(0.3, 0.2), 0.0));
}

TEST_CASE("covering map: inversion route residuals on a tau grid", "[cohn]") {
    // at rho the invariant J vanishes, so p(v(rho)) = 0
    TauPoint rho(cplx(-0.5, std::sqrt(3.0) / 2.0));
    CHECK(std::abs(cohn_p(v_of_tau_pointwise(rho))) < 1e-10);
    for (int k = 0; k < 20; ++k) {
        double im = 0.3 + 1.7 * k / 19.0;
        TauPoint tp(cplx(0.08 * ((k % 5) - 2), im));
        cplx J = j_family(tp).J;
        cplx v = v_of_tau_pointwise(tp);
        cplx p = cohn_p(v), dp = cohn_dp(v);
        CHECK(std::abs(4.0 * p * p * p + J) < 1e-8);
        CHECK(std::abs(dp * dp - (1.0 - J)) < 1e-8);
    }
}

TEST_CASE("covering map: derivative law and path integration route", "[cohn]") {
    TauPoint t0(cplx(0.1, 1.1));
    cplx v0 = v_of_tau_pointwise(t0);
    // (v')^6 = c^6 Delta, and the analytic derivative matches central differences
    cplx w = covering_derivative(t0, v0);
    CHECK(std::abs(std::pow(w, 6.0) - covering_c6() * eta_delta(t0).delta_E) < 1e-6);
    double h = 1e-5;
    cplx wfd = (v_of_tau_pointwise(TauPoint(t0.tau + h)) -
                v_of_tau_pointwise(TauPoint(t0.tau - h))) / (2 * h);
    CHECK(std::abs(w - wfd) < 1e-8);
    // integrating v' = c Delta^{1/6} with branch continuation agrees with the
    // pointwise inversion up to deck transformations v -> +-v + lattice
    auto path = covering_path_start(t0);
    for (cplx tgt : {cplx(0.2, 1.4), cplx(-0.1, 0.8), cplx(0.05, 0.5)}) {
        cplx vp = v_of_tau_path(path, tgt);
        CHECK(deck_distance(vp, v_of_tau_pointwise(TauPoint(tgt))) < 1e-7);
    }
    CHECK(path.branch.size() >= 3 * 64);
}

TEST_CASE("Weber functions along the covering", "[cohn]") {
    for (cplx tau : {cplx(0.1, 1.1), cplx(-0.2, 0.7), cplx(0.0, 1.7)}) {
        auto r = weber_wp_check(TauPoint(tau));
        CHECK(r.gamma2_minus < 1e-8);
        CHECK(r.gamma3_i < 1e-8);
        CHECK(r.cube_square < 1e-8);
        // the opposite sign / real-convention pairings fail by O(1)
        CHECK(r.gamma2_printed > 1.0);
        CHECK(r.gamma3_printed > 1.0);
    }
}
