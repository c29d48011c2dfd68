#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace lgqc {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;

namespace detail {
struct FactCache {
    std::vector<Int> f{Int(1)};
    std::mutex m;
    Int get(std::size_t n) {
        std::lock_guard<std::mutex> lk(m);
        while (f.size() <= n) f.push_back(f.back() * Int(f.size()));
        return f[n];
    }
};
inline FactCache &fact_cache() {
    static FactCache c;
    return c;
}
} // namespace detail

inline Int factorial(std::size_t n) { return detail::fact_cache().get(n); }

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r = 1;
    for (long j = 0; j < k; ++j) { r *= Int(n - j); r /= Int(j + 1); }
    return r;
}

// log of a huge positive integer without overflow
inline double log_int(const Int &v) {
    if (v <= 0) throw std::domain_error("log_int: nonpositive");
    auto bits = boost::multiprecision::msb(v);
    if (bits < 900) return std::log(v.convert_to<double>());
    Int shifted = v >> (bits - 64);
    return std::log(shifted.convert_to<double>()) + double(bits - 64) * std::log(2.0);
}

inline double to_double(const Rat &r) {
    Int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    bool neg = n < 0;
    if (neg) n = -n;
    if (n == 0) return 0.0;
    double v = std::exp(log_int(n) - log_int(d));
    return neg ? -v : v;
}

} // namespace lgqc
