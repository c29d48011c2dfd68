#include <catch2/catch_amalgamated.hpp>

#include "lgqc/cyclotomic.hpp"
#include "lgqc/series.hpp"

#include <random>

using namespace lgqc;

using RS = Series<Rat>;

static RS random_series(int K, std::mt19937 &rng, bool unit_const = false) {
    RS s(K);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int n = 0; n <= K; ++n) s.c[n] = Rat(num(rng)) / Rat(den(rng));
    if (unit_const || s.c[0] == 0) s.c[0] = 1;
    return s;
}

TEST_CASE("bell: small closed forms", "[series]") {
    std::vector<Rat> x{2, 3, 5, 7, 11, 13};
    // B_{3,2} = 3 x1 x2
    CHECK(bell_partial(3, 2, x) == Rat(3) * x[0] * x[1]);
    // B_{n,1} = x_n, B_{n,n} = x_1^n
    for (int n = 1; n <= 6; ++n) {
        CHECK(bell_partial(n, 1, x) == x[n - 1]);
        Rat p = 1;
        for (int t = 0; t < n; ++t) p *= x[0];
        CHECK(bell_partial(n, n, x) == p);
    }
    CHECK(bell_partial(0, 0, x) == 1);
    CHECK(bell_partial(4, 5, x) == 0);
}

TEST_CASE("bell: recurrence vs partition enumeration", "[series]") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> x(12);
        for (auto &v : x) v = Rat(num(rng)) / Rat(den(rng));
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(bell_partial(n, k, x) == bell_partial_partitions(n, k, x));
    }
}

TEST_CASE("compose: Horner vs Bell route, identity, hand value", "[series]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        RS f = random_series(12, rng);
        RS g = random_series(12, rng);
        g.c[0] = 0;
        RS a = compose(f, g), b = compose_bell(f, g);
        CHECK(a.c == b.c);
    }
    std::mt19937 rng2(3);
    RS fid = random_series(10, rng2);
    CHECK(compose(fid, RS::identity(10)).c == fid.c);
    // e^{x+x^2}: coefficient of x^2 is 3/2
    RS ex(6);
    Rat fct = 1;
    for (int n = 0; n <= 6; ++n) {
        ex.c[n] = Rat(1) / fct;
        fct *= (n + 1);
    }
    RS g(6);
    g.c[1] = 1;
    g.c[2] = 1;
    CHECK(compose(ex, g).c[2] == Rat(3, 2));
}

TEST_CASE("recenter composes through nonzero constant terms", "[series]") {
    std::mt19937 rng(5);
    RS f = random_series(8, rng);
    RS g = random_series(8, rng);
    g.c[0] = Rat(1, 2);
    RS h = compose_at(f, g);
    // check numerically at a point inside convergence: evaluate both at x = 1/8
    Rat x(1, 8);
    Rat gx = 0, hx = 0, fx = 0;
    for (int n = g.K; n >= 0; --n) gx = gx * x + g.c[n];
    for (int n = h.K; n >= 0; --n) hx = hx * x + h.c[n];
    // f(gx) truncations differ from h(x) by higher order; instead compare exact:
    // h should equal Horner substitution of the full g (with constant) into the
    // recentered f; verify via an independent direct expansion
    RS acc = RS::constant(8, f.c[8]);
    for (int n = 7; n >= 0; --n) acc = acc * g + RS::constant(8, f.c[n]);
    CHECK(h.c == acc.c);
    (void)fx;
}

TEST_CASE("reciprocal: both routes, defining property", "[series]") {
    std::mt19937 rng(13);
    RS one = RS::constant(10, 1);
    CHECK(reciprocal(one).c == one.c);
    RS g(10);
    g.c[0] = 1;
    g.c[1] = 1; // 1+x
    RS r = reciprocal(g);
    for (int n = 0; n <= 10; ++n) CHECK(r.c[n] == (n % 2 ? Rat(-1) : Rat(1)));
    for (int trial = 0; trial < 4; ++trial) {
        RS h = random_series(10, rng, true);
        RS a = reciprocal(h), b = reciprocal_via_potential(h);
        CHECK(a.c == b.c);
        RS p = h * a;
        CHECK(p.c[0] == 1);
        for (int n = 1; n <= 10; ++n) CHECK(p.c[n] == 0);
    }
    CHECK_THROWS(reciprocal(RS(4)));
}

TEST_CASE("reversion: catalan-like example and round trips", "[series]") {
    RS f(8);
    f.c[1] = 1;
    f.c[2] = 1; // x + x^2
    RS g = reversion(f);
    // x - x^2 + 2x^3 - 5x^4 + 14x^5 ... (signed Catalan numbers)
    std::vector<Rat> want{0, 1, -1, 2, -5, 14, -42, 132, -429};
    CHECK(g.c == want);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 3; ++trial) {
        RS h = random_series(9, rng);
        h.c[0] = 0;
        if (h.c[1] == 0) h.c[1] = 2;
        RS inv = reversion(h);
        RS rt = compose(h, inv), rt2 = compose(inv, h);
        for (int n = 0; n <= 9; ++n) {
            CHECK(rt.c[n] == (n == 1 ? Rat(1) : Rat(0)));
            CHECK(rt2.c[n] == (n == 1 ? Rat(1) : Rat(0)));
        }
    }
    CHECK_THROWS(reversion(RS::constant(5, 1)));
    CHECK_THROWS(reversion(RS(5)));
}

TEST_CASE("roots, exp, log over exact fields", "[series]") {
    std::mt19937 rng(23);
    RS g = random_series(9, rng, true);
    RS sq = g * g;
    CHECK(nth_root_with(sq, 2, g.c[0]).c == g.c);
    RS cb = g * g * g;
    CHECK(nth_root_with(cb, 3, g.c[0]).c == g.c);
    RS f = random_series(9, rng);
    f.c[0] = 0;
    RS e = exp_series(f);
    CHECK(log_series(e).c == f.c);
}

TEST_CASE("potential polynomials expand integer powers", "[series]") {
    // (1 + sum x_m t^m/m!)^s for integer s matches direct multiplication
    std::mt19937 rng(29);
    RS g = random_series(8, rng, true);
    std::vector<Rat> xd(8);
    for (int m = 1; m <= 8; ++m) xd[m - 1] = g.c[m] * Rat(factorial(m));
    for (int s : {2, 3}) {
        RS p = RS::constant(8, 1);
        for (int t = 0; t < s; ++t) p = p * g;
        for (int n = 0; n <= 8; ++n)
            CHECK(potential_poly(n, Rat(s), xd) == p.c[n] * Rat(factorial(n)));
    }
}

TEST_CASE("exact cyclotomic arithmetic", "[cyclotomic]") {
    Cyc w = Cyc::omega();
    CHECK(w * w * w == Cyc(1));
    CHECK(w * w + w + Cyc(1) == Cyc(0));
    Cyc is3 = Cyc::i_sqrt3();
    CHECK(is3 * is3 == Cyc(-3));
    Cyc z(Rat(3, 7), Rat(-2, 5));
    CHECK(z * z.inv() == Cyc(1));
    CHECK(z * z.conj() == Cyc(z.norm()));

    Cyc12 i = Cyc12::i();
    CHECK(i * i == Cyc12(Cyc(-1)));
    Cyc12 s3 = Cyc12::sqrt3();
    CHECK(s3 * s3 == Cyc12(Cyc(3)));
    // zeta12 = (sqrt3 + i)/2, order 12
    Cyc12 z12 = (s3 + i) / Cyc12(Cyc(2));
    Cyc12 p = Cyc12(Cyc(1));
    for (int k = 0; k < 12; ++k) {
        if (k > 0) CHECK(!(p == Cyc12(Cyc(1))));
        p = p * z12;
    }
    CHECK(p == Cyc12(Cyc(1)));
    Cyc12 q(Cyc(Rat(1, 3), Rat(2)), Cyc(Rat(-1), Rat(5, 4)));
    CHECK(q * q.inv() == Cyc12(Cyc(1)));
    // numeric embedding sanity
    CHECK(std::abs(z12.to_complex() - std::polar(1.0, PI / 6)) < 1e-15);
}
