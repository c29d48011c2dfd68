#include <catch2/catch_amalgamated.hpp>

#include "lgqc/gw.hpp"

using namespace lgqc;

TEST_CASE("curve counts: seeds and known values", "[gw]") {
    CHECK_THROWS(kontsevich_table(0));
    auto t1 = kontsevich_table(1);
    REQUIRE(t1.n.size() == 1);
    CHECK(t1.n[0] == 1);

    auto t = kontsevich_table(6);
    CHECK(t.n[1] == 1);
    CHECK(t.n[2] == 12);
    CHECK(t.n[3] == 620);
    CHECK(t.n[4] == 87304);
    CHECK(t.n[5] == 26312976);
}

TEST_CASE("curve counts: summation order invariance", "[gw]") {
    auto f = kontsevich_table(40, false);
    auto b = kontsevich_table(40, true);
    CHECK(f.n == b.n);
}

TEST_CASE("phi series coefficients", "[gw]") {
    auto t = kontsevich_table(6);
    auto p0 = phi_derivative_series(t, 0, 6);
    CHECK(p0.c[1] == Rat(1, 2));
    CHECK(p0.c[3] == Rat(12) / Rat(factorial(8)));
    auto p2 = phi_derivative_series(t, 2, 6);
    CHECK(p2.c[1] == Rat(1, 2));
    CHECK(p2.c[3] == Rat(9 * 12) / Rat(factorial(8)));
    CHECK(phi_derivative_series(t, 0, 0).c == std::vector<Rat>{Rat(0)});
    CHECK_THROWS(phi_derivative_series(t, 0, 7));
    CHECK_THROWS(phi_derivative_series(t, 4, 3));
}

TEST_CASE("associativity residual vanishes exactly; perturbation breaks it", "[gw]") {
    for (int d : {1, 5, 30}) {
        auto r = wdvv_residual(d);
        for (int n = 0; n <= r.K; ++n) CHECK(r.c[n] == 0);
    }
    auto t = kontsevich_table(5);
    t.n[1] = 2; // perturb N_2
    auto r = wdvv_residual_of(t, 5);
    CHECK(r.c[2] != 0);
}

TEST_CASE("growth-rate fit and radius bracketing", "[gw]") {
    auto t = kontsevich_table(60);
    auto [a, b] = fit_asymptotics(t, 20, 60);
    CHECK(a > 0.131);
    CHECK(a < 0.145);
    CHECK(b > 5.2);
    CHECK(b < 7.0);
    CHECK_THROWS(fit_asymptotics(t, 20, 23));
    CHECK_THROWS(fit_asymptotics(t, 20, 61));

    // ratio estimates converge toward a
    double prev_gap = 1e9;
    for (long k = 20; k <= 55; k += 5) {
        double gap = std::abs(asymptotic_ratio(t, k) - a);
        CHECK(gap < prev_gap + 1e-4);
        prev_gap = gap;
    }

    // N_k/(3k-1)! r^k -> 0 for r = 1/0.15 and -> infinity for r = 1/0.13:
    // absolute decay for the first, and (since the k^{-7/2} prefactor masks the
    // geometric growth at small k) strictly increasing tail terms for the second
    auto lterm = [&](long k, double r) {
        return log_int(t.n[k - 1]) - log_int(factorial(3 * k - 1)) + k * std::log(r);
    };
    CHECK(lterm(60, 1 / 0.15) < -4);
    CHECK(lterm(60, 1 / 0.15) < lterm(30, 1 / 0.15) - 2);
    CHECK(lterm(60, 1 / 0.13) > lterm(59, 1 / 0.13));
}
