#pragma once

// Degree-d counts of rational plane curves through 3d-1 points, the generating
// function Phi and its e^X-derivatives, the associativity ODE residual, and
// the growth-rate fit.

#include "lgqc/numeric.hpp"
#include "lgqc/series.hpp"

#include <cmath>
#include <utility>

namespace lgqc {

struct GWTable {
    long max_degree = 0;
    std::vector<Int> n; // n[d-1] = N_d
};

// N_d = sum_{m=1}^{d-1} [ C(3d-4,3m-2) m^2 (d-m)^2 - C(3d-4,3m-3) m (d-m)^3 ] N_m N_{d-m}
inline GWTable kontsevich_table(long max_degree, bool backward_sum = false) {
    if (max_degree < 1) throw std::invalid_argument("kontsevich_table: max_degree < 1");
    GWTable t;
    t.max_degree = max_degree;
    t.n.assign(max_degree, Int(0));
    t.n[0] = 1;
    for (long d = 2; d <= max_degree; ++d) {
        Int acc = 0;
        for (long i = 1; i <= d - 1; ++i) {
            long m = backward_sum ? d - i : i;
            Int mm(m), dm(d - m);
            Int term = binomial(3 * d - 4, 3 * m - 2) * mm * mm * dm * dm
                     - binomial(3 * d - 4, 3 * m - 3) * mm * dm * dm * dm;
            acc += term * t.n[m - 1] * t.n[d - m - 1];
        }
        t.n[d - 1] = acc;
    }
    return t;
}

// Series in q = e^X whose q^n coefficient is n^m N_n/(3n-1)!.
// m = 0 gives Phi itself; m = 1,2,3 give d/dX applied m times.
inline Series<Rat> phi_derivative_series(const GWTable &t, int m, int order) {
    if (m < 0 || m > 3) throw std::invalid_argument("phi_derivative_series: m not in 0..3");
    if (order > t.max_degree) throw std::invalid_argument("phi_derivative_series: order exceeds table");
    Series<Rat> s(std::max(order, 0));
    for (int n = 1; n <= order; ++n) {
        Rat c = Rat(t.n[n - 1]) / Rat(factorial(3 * n - 1));
        for (int j = 0; j < m; ++j) c *= n;
        s.c[n] = c;
    }
    return s;
}

// Residual of -6*Phi + 33*Phi' - 54*Phi'' - (Phi'')^2 + Phi'''*(27 + 2*Phi' - 3*Phi'')
// as a q-series; identically zero iff the table satisfies the recursion.
inline Series<Rat> wdvv_residual_of(const GWTable &t, int order) {
    Series<Rat> p0 = phi_derivative_series(t, 0, order);
    Series<Rat> p1 = phi_derivative_series(t, 1, order);
    Series<Rat> p2 = phi_derivative_series(t, 2, order);
    Series<Rat> p3 = phi_derivative_series(t, 3, order);
    Series<Rat> r = Rat(-6) * p0 + Rat(33) * p1 - Rat(54) * p2 - p2 * p2
                  + p3 * (Series<Rat>::constant(order, Rat(27)) + Rat(2) * p1 - Rat(3) * p2);
    return r;
}

inline Series<Rat> wdvv_residual(int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("wdvv_residual: max_degree < 1");
    return wdvv_residual_of(kontsevich_table(max_degree), max_degree);
}

// Least-squares fit of log(N_k/(3k-1)!) = log b + k log a - (7/2) log k
// over k in [k_min, k_max]; the -7/2 exponent is held fixed.
inline std::pair<double, double> fit_asymptotics(const GWTable &t, long k_min, long k_max) {
    if (k_max > t.max_degree || k_max - k_min < 4)
        throw std::invalid_argument("fit_asymptotics: bad window");
    double Sx = 0, Sy = 0, Sxx = 0, Sxy = 0;
    long n = 0;
    for (long k = k_min; k <= k_max; ++k) {
        double y = log_int(t.n[k - 1]) - log_int(factorial(3 * k - 1)) + 3.5 * std::log((double)k);
        double x = (double)k;
        Sx += x; Sy += y; Sxx += x * x; Sxy += x * y;
        ++n;
    }
    double slope = (n * Sxy - Sx * Sy) / (n * Sxx - Sx * Sx);
    double icept = (Sy - slope * Sx) / n;
    return {std::exp(slope), std::exp(icept)}; // (a, b)
}

// Ratio estimator a_k = [N_{k+1}/(3k+2)!] / [N_k/(3k-1)!] * ((k+1)/k)^{7/2}
inline double asymptotic_ratio(const GWTable &t, long k) {
    double lr = log_int(t.n[k]) - log_int(t.n[k - 1])
              - log_int(factorial(3 * k + 2)) + log_int(factorial(3 * k - 1));
    return std::exp(lr + 3.5 * std::log(double(k + 1) / double(k)));
}

} // namespace lgqc
