#pragma once

// Truncated formal power series over a coefficient field, plus the partition
// combinatorics (partial Bell polynomials, potential partition polynomials)
// used by every series pipeline here.
//
// Coefficients are stored in plain normalization (c_n, not n! c_n); the
// conversion to derivative normalization happens only at the Bell-polynomial
// boundary, in compose_bell() and potential_poly(). Keep it that way: every
// factorial bug in this domain comes from mixing the two conventions.

#include "lgqc/numeric.hpp"

#include <cassert>
#include <functional>
#include <vector>

namespace lgqc {

// Build a field element from a big integer (fields only expose F(int)).
template <class F> F f_from_int(Int v) {
    bool neg = v < 0;
    if (neg) v = -v;
    const Int base = 1000000000;
    std::vector<int> limbs;
    while (v > 0) {
        limbs.push_back((v % base).convert_to<int>());
        v /= base;
    }
    F r(0);
    for (auto it = limbs.rbegin(); it != limbs.rend(); ++it)
        r = r * F(1000000000) + F(*it);
    return neg ? -r : r;
}

template <class F> struct Series {
    int K = 0;                 // truncation order; c has K+1 entries
    std::vector<F> c;

    Series() : c(1, F(0)) {}
    explicit Series(int order) : K(order), c(order + 1, F(0)) {}
    Series(int order, std::vector<F> cs) : K(order), c(std::move(cs)) { c.resize(K + 1, F(0)); }

    static Series constant(int order, const F &v) {
        Series s(order);
        s.c[0] = v;
        return s;
    }
    static Series identity(int order) {
        Series s(order);
        if (order >= 1) s.c[1] = F(1);
        return s;
    }

    const F &operator[](int n) const { return c[n]; }
    F &operator[](int n) { return c[n]; }

    Series truncated(int order) const {
        Series s(order);
        for (int n = 0; n <= std::min(order, K); ++n) s.c[n] = c[n];
        return s;
    }

    friend Series operator+(const Series &x, const Series &y) {
        Series s(std::min(x.K, y.K));
        for (int n = 0; n <= s.K; ++n) s.c[n] = x.c[n] + y.c[n];
        return s;
    }
    friend Series operator-(const Series &x, const Series &y) {
        Series s(std::min(x.K, y.K));
        for (int n = 0; n <= s.K; ++n) s.c[n] = x.c[n] - y.c[n];
        return s;
    }
    friend Series operator-(const Series &x) {
        Series s(x.K);
        for (int n = 0; n <= s.K; ++n) s.c[n] = -x.c[n];
        return s;
    }
    friend Series operator*(const Series &x, const Series &y) {
        Series s(std::min(x.K, y.K));
        for (int n = 0; n <= s.K; ++n)
            for (int j = 0; j <= n; ++j) s.c[n] = s.c[n] + x.c[j] * y.c[n - j];
        return s;
    }
    friend Series operator*(const F &a, const Series &x) {
        Series s(x.K);
        for (int n = 0; n <= s.K; ++n) s.c[n] = a * x.c[n];
        return s;
    }

    bool operator==(const Series &o) const { return K == o.K && c == o.c; }

    Series derivative() const {
        Series s(K);
        for (int n = 1; n <= K; ++n) s.c[n - 1] = F(n) * c[n];
        s.c[K] = F(0);
        return s;
    }
    Series antiderivative() const { // constant term 0
        Series s(K);
        for (int n = 0; n < K; ++n) s.c[n + 1] = c[n] / F(n + 1);
        return s;
    }
    Series shifted(int m) const { // multiply by x^m
        Series s(K);
        for (int n = 0; n + m <= K; ++n) s.c[n + m] = c[n];
        return s;
    }
};

// Horner evaluation at a point of type P (P must be constructible from F)
template <class P, class F> P series_eval(const Series<F> &f, const P &x) {
    P acc(0);
    for (int n = f.K; n >= 0; --n) acc = acc * x + P(f.c[n]);
    return acc;
}

inline cplx series_eval_c(const Series<cplx> &f, cplx x) {
    cplx acc = 0;
    for (int n = f.K; n >= 0; --n) acc = acc * x + f.c[n];
    return acc;
}

// h = f(g), strict: g must have zero constant term. Plain Horner substitution.
template <class F> Series<F> compose(const Series<F> &f, const Series<F> &g) {
    if (!(g.c[0] == F(0))) throw std::invalid_argument("compose: g(0) != 0");
    int K = std::min(f.K, g.K);
    int M = std::min(f.K, K);
    Series<F> gt = g.truncated(K);
    Series<F> h = Series<F>::constant(K, f.c[M]);
    for (int n = M - 1; n >= 0; --n) h = h * gt + Series<F>::constant(K, f.c[n]);
    return h;
}

// Taylor re-expansion f(a + x) by repeated synthetic division.
template <class F> Series<F> recenter(const Series<F> &f, const F &a) {
    Series<F> r = f;
    for (int j = 0; j <= r.K; ++j)           // r.c[j] becomes f^{(j)}(a)/j!
        for (int n = r.K - 1; n >= j; --n) r.c[n] = r.c[n] + a * r.c[n + 1];
    return r;
}

// Composition allowing nonzero g(0): re-expand f at g(0) first.
template <class F> Series<F> compose_at(const Series<F> &f, const Series<F> &g) {
    Series<F> g0free = g;
    F a = g.c[0];
    g0free.c[0] = F(0);
    return compose(recenter(f, a), g0free);
}

// Partial Bell polynomial B_{n,k}(x_1..x_n), derivative normalization,
// by the recurrence B_{n,k} = sum_i C(n-1,i-1) x_i B_{n-i,k-1}.
template <class F> F bell_partial(int n, int k, const std::vector<F> &x) {
    if (n == 0 && k == 0) return F(1);
    if (k <= 0 || k > n) return F(0);
    assert((int)x.size() >= n);
    std::vector<std::vector<F>> B(n + 1, std::vector<F>(k + 1, F(0)));
    B[0][0] = F(1);
    for (int nn = 1; nn <= n; ++nn)
        for (int kk = 1; kk <= std::min(nn, k); ++kk) {
            F acc(0);
            for (int i = 1; i <= nn - kk + 1; ++i)
                acc = acc + f_from_int<F>(binomial(nn - 1, i - 1)) * (x[i - 1] * B[nn - i][kk - 1]);
            B[nn][kk] = acc;
        }
    return B[n][k];
}

// Same by explicit partition enumeration (cross-check route).
template <class F> F bell_partial_partitions(int n, int k, const std::vector<F> &x) {
    if (n == 0 && k == 0) return F(1);
    if (k <= 0 || k > n) return F(0);
    F total(0);
    // multiplicities j_1..j_n with sum j_i = k, sum i*j_i = n
    std::function<void(int, int, int, Int, F)> rec =
        [&](int i, int remk, int remn, Int denom, F prod) {
            if (remk == 0 && remn == 0) {
                Int coef = factorial(n) / denom;
                assert(coef * denom == factorial(n));
                total = total + f_from_int<F>(coef) * prod;
                return;
            }
            if (i > remn || remk == 0) return;
            for (int j = 0; j * i <= remn && j <= remk; ++j) {
                Int d = denom * factorial(j);
                F p = prod;
                for (int t = 0; t < j; ++t) {
                    d *= factorial(i);
                    p = p * x[i - 1];
                }
                rec(i + 1, remk - j, remn - j * i, d, p);
            }
        };
    rec(1, k, n, Int(1), F(1));
    return total;
}

// h = f(g) via composite-series derivatives: h_n = sum_k f_k B_{n,k}(g_*),
// converting plain <-> derivative normalization at this boundary.
template <class F> Series<F> compose_bell(const Series<F> &f, const Series<F> &g) {
    if (!(g.c[0] == F(0))) throw std::invalid_argument("compose_bell: g(0) != 0");
    int K = std::min(f.K, g.K);
    std::vector<F> gd(K); // derivative-normalized tail m! g_m
    for (int m = 1; m <= K; ++m) gd[m - 1] = g.c[m] * f_from_int<F>(factorial(m));
    Series<F> h(K);
    h.c[0] = f.c[0];
    for (int n = 1; n <= K; ++n) {
        F acc(0);
        for (int k = 1; k <= std::min(n, f.K); ++k)
            acc = acc + f.c[k] * f_from_int<F>(factorial(k)) * bell_partial(n, k, gd);
        h.c[n] = acc / f_from_int<F>(factorial(n));
    }
    return h;
}

// Potential partition polynomial C_{n,s}(x_1..x_n), derivative normalization:
// the n-th derivative coefficient of (1 + sum x_m t^m/m!)^s at t = 0.
// C_{n,s} = sum_k s(s-1)...(s-k+1) B_{n,k}(x).
template <class F> F potential_poly(int n, const F &s, const std::vector<F> &x) {
    if (n == 0) return F(1);
    F acc(0);
    F fall(1);
    for (int k = 1; k <= n; ++k) {
        fall = fall * (s - F(k - 1));
        acc = acc + fall * bell_partial(n, k, x);
    }
    return acc;
}

// 1/g by long division; g_0 != 0.
template <class F> Series<F> reciprocal(const Series<F> &g) {
    if (g.c[0] == F(0)) throw std::domain_error("reciprocal: g(0) = 0");
    Series<F> r(g.K);
    F inv0 = F(1) / g.c[0];
    r.c[0] = inv0;
    for (int n = 1; n <= g.K; ++n) {
        F acc(0);
        for (int j = 1; j <= n; ++j) acc = acc + g.c[j] * r.c[n - j];
        r.c[n] = -inv0 * acc;
    }
    return r;
}

// 1/g via C_{n,-1} of the normalized tail (slower; cross-check route).
template <class F> Series<F> reciprocal_via_potential(const Series<F> &g) {
    if (g.c[0] == F(0)) throw std::domain_error("reciprocal: g(0) = 0");
    int K = g.K;
    F inv0 = F(1) / g.c[0];
    std::vector<F> xd(K);
    for (int m = 1; m <= K; ++m) xd[m - 1] = g.c[m] * inv0 * f_from_int<F>(factorial(m));
    Series<F> r(K);
    for (int n = 0; n <= K; ++n)
        r.c[n] = inv0 * potential_poly(n, F(-1), xd) / f_from_int<F>(factorial(n));
    return r;
}

template <class F> Series<F> operator/(const Series<F> &x, const Series<F> &y) {
    return x * reciprocal(y);
}

// Compositional inverse: f_0 = 0, f_1 != 0; returns g with f(g(x)) = x + O(x^{K+1}).
template <class F> Series<F> reversion(const Series<F> &f) {
    if (!(f.c[0] == F(0))) throw std::invalid_argument("reversion: f(0) != 0");
    if (f.c[1] == F(0)) throw std::domain_error("reversion: f'(0) = 0");
    int K = f.K;
    Series<F> g(K);
    g.c[1] = F(1) / f.c[1];
    for (int n = 2; n <= K; ++n) {
        Series<F> p = compose(f.truncated(n), g.truncated(n));
        g.c[n] = -p.c[n] / f.c[1];
    }
    return g;
}

// Solve h^m = g given the constant-term root r0 (r0^m = g_0, r0 != 0).
template <class F> Series<F> nth_root_with(const Series<F> &g, int m, const F &r0) {
    int K = g.K;
    Series<F> h = Series<F>::constant(K, r0);
    F r0m1(1);
    for (int t = 0; t < m - 1; ++t) r0m1 = r0m1 * r0;
    F d = F(m) * r0m1;
    for (int n = 1; n <= K; ++n) {
        Series<F> p = Series<F>::constant(K, F(1));
        for (int t = 0; t < m; ++t) p = p * h;
        h.c[n] = (g.c[n] - p.c[n]) / d;
    }
    return h;
}

// exp of a series with zero constant term, via h' = f' h.
template <class F> Series<F> exp_series(const Series<F> &f) {
    if (!(f.c[0] == F(0))) throw std::invalid_argument("exp_series: f(0) != 0");
    Series<F> h = Series<F>::constant(f.K, F(1));
    for (int n = 1; n <= f.K; ++n) {
        F acc(0);
        for (int j = 1; j <= n; ++j) acc = acc + F(j) * f.c[j] * h.c[n - j];
        h.c[n] = acc / F(n);
    }
    return h;
}

// log(g) with g_0 = 1, via (log g)' = g'/g.
template <class F> Series<F> log_series(const Series<F> &g) {
    if (!(g.c[0] == F(1))) throw std::invalid_argument("log_series: g(0) != 1");
    return (g.derivative() * reciprocal(g)).antiderivative();
}

} // namespace lgqc
