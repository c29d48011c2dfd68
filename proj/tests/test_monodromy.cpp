#include <catch2/catch_amalgamated.hpp>

#include "lgqc/monodromy.hpp"

#include <random>

using namespace lgqc;

TEST_CASE("printed matrix constants and relations", "[monodromy]") {
    auto c = monodromy_constants();
    Mat3 S;
    S.a = {{{1, 0, 0}, {3, 1, 0}, {-3, -3, 1}}};
    CHECK(c.S == S);
    Mat3 T0;
    T0.a = {{{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}};
    CHECK(c.T0 == T0);
    Mat3 R1;
    R1.a = {{{-1, -3, 3}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(c.R1 == R1);
    for (auto &chk : relations_report()) {
        INFO(chk.name);
        CHECK(chk.pass);
    }
}

TEST_CASE("basis change images match the printed generators", "[monodromy]") {
    for (auto &chk : change_of_basis_report()) {
        INFO(chk.name);
        CHECK(chk.pass);
    }
}

static Mat2 random_sl2(std::mt19937 &rng, int len = 6) {
    std::uniform_int_distribution<int> pw(-2, 2);
    Mat2 g = Mat2::id();
    Mat2 Smat(0, -1, 1, 0);
    for (int w = 0; w < len; ++w) {
        int t = pw(rng);
        g = g * Mat2(1, t, 0, 1) * Smat;
    }
    return g;
}

TEST_CASE("symmetric square is a homomorphism", "[monodromy]") {
    std::mt19937 rng(53);
    for (int t = 0; t < 20; ++t) {
        Mat2 A = random_sl2(rng), B = random_sl2(rng);
        CHECK(sym_square(A * B) == sym_square(A) * sym_square(B));
        CHECK(sym_square(A).det() == 1);
        CHECK(sym_square(-A) == sym_square(A));
    }
}

TEST_CASE("index-3 subgroup membership pattern", "[monodromy]") {
    auto c = monodromy_constants();
    CHECK(gamma3_membership(c.r1));
    CHECK(gamma3_membership(c.r2));
    CHECK(gamma3_membership(c.r3));
    CHECK(gamma3_membership(-Mat2::id()));
    CHECK(!gamma3_membership(Mat2(1, 1, 0, 1)));
    CHECK_THROWS(gamma3_membership(Mat2(1, 0, 0, 2)));
    // membership is closed under product on random members
    std::mt19937 rng(59);
    std::vector<Mat2> gens{c.r1, c.r2, c.r3};
    std::uniform_int_distribution<int> pick(0, 2);
    Mat2 g = Mat2::id();
    for (int w = 0; w < 30; ++w) {
        g = g * gens[pick(rng)];
        CHECK(gamma3_membership(g));
    }
}

TEST_CASE("cube-root character: exact exponent vs numeric transport", "[monodromy]") {
    auto c = monodromy_constants();
    TauPoint tp(cplx(0.11, 1.23));
    CHECK(gamma2_character_check(Mat2::id(), tp) < 1e-12);
    CHECK(gamma2_character_exponent(c.r1) == 0);
    CHECK(gamma2_character_check(c.r1, tp) < 1e-8);
    // T = (1,1;0,1): exponent -ab = -1 mod 3 = 2
    Mat2 T(1, 1, 0, 1);
    CHECK(gamma2_character_exponent(T) == 2);
    CHECK(gamma2_character_check(T, tp) < 1e-8);
    // membership agrees with numeric character triviality on 20 elements,
    // and with the eta^8 weight-4 transformation for members
    std::mt19937 rng(61);
    int used = 0;
    while (used < 20) {
        Mat2 g = random_sl2(rng);
        cplx tau = tp.tau;
        cplx cz = (double)g.a[1][0] * tau + (double)g.a[1][1];
        cplx gt = ((double)g.a[0][0] * tau + (double)g.a[0][1]) / cz;
        if (gt.imag() < 0.08) continue;
        ++used;
        bool member = gamma3_membership(g);
        CHECK(member == (gamma2_character_exponent(g) == 0));
        if (member) {
            cplx lhs = std::pow(eta_eval(TauPoint(gt, 0.01)), 8.0);
            cplx rhs = std::pow(cz, 4.0) * std::pow(eta_eval(tp), 8.0);
            CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-8);
        }
    }
}
