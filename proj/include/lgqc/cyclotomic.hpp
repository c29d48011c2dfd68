#pragma once

// Exact arithmetic in Q(zeta3) and Q(zeta12) = Q(zeta3, i).

#include "lgqc/numeric.hpp"

namespace lgqc {

// a + b*w with w = e^{2 pi i/3}, w^2 = -1 - w
struct Cyc {
    Rat a{0}, b{0};

    Cyc() = default;
    Cyc(int v) : a(v) {}
    Cyc(const Rat &v) : a(v) {}
    Cyc(const Rat &a_, const Rat &b_) : a(a_), b(b_) {}

    static Cyc omega() { return Cyc(Rat(0), Rat(1)); }
    static Cyc zeta3_pow(long k) {
        k = ((k % 3) + 3) % 3;
        if (k == 0) return Cyc(1);
        if (k == 1) return omega();
        return Cyc(Rat(-1), Rat(-1)); // w^2
    }
    // i*sqrt(3) = 1 + 2w
    static Cyc i_sqrt3() { return Cyc(Rat(1), Rat(2)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    Cyc conj() const { return Cyc(a - b, -b); }
    Rat norm() const { return a * a - a * b + b * b; }

    friend Cyc operator+(const Cyc &x, const Cyc &y) { return Cyc(x.a + y.a, x.b + y.b); }
    friend Cyc operator-(const Cyc &x, const Cyc &y) { return Cyc(x.a - y.a, x.b - y.b); }
    friend Cyc operator-(const Cyc &x) { return Cyc(-x.a, -x.b); }
    friend Cyc operator*(const Cyc &x, const Cyc &y) {
        // (a+bw)(c+dw) = ac - bd + (ad+bc-bd) w
        return Cyc(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
    }
    Cyc inv() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("Cyc: divide by zero");
        Cyc c = conj();
        return Cyc(c.a / n, c.b / n);
    }
    friend Cyc operator/(const Cyc &x, const Cyc &y) { return x * y.inv(); }
    friend bool operator==(const Cyc &x, const Cyc &y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Cyc &x, const Cyc &y) { return !(x == y); }

    cplx to_complex() const {
        static const cplx w(-0.5, 0.8660254037844386467637231707529362);
        return to_double(a) + to_double(b) * w;
    }
};

// x + y*i with x, y in Q(zeta3); field Q(zeta12)
struct Cyc12 {
    Cyc re, im;

    Cyc12() = default;
    Cyc12(int v) : re(v) {}
    Cyc12(const Cyc &r) : re(r) {}
    Cyc12(const Cyc &r, const Cyc &i) : re(r), im(i) {}

    static Cyc12 i() { return Cyc12(Cyc(0), Cyc(1)); }
    // sqrt(3) = -i*(1+2w)
    static Cyc12 sqrt3() { return Cyc12(Cyc(0), -Cyc::i_sqrt3()); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Cyc12 conj_i() const { return Cyc12(re, -im); } // complex-structure conjugation over Q(zeta3)

    friend Cyc12 operator+(const Cyc12 &x, const Cyc12 &y) { return Cyc12(x.re + y.re, x.im + y.im); }
    friend Cyc12 operator-(const Cyc12 &x, const Cyc12 &y) { return Cyc12(x.re - y.re, x.im - y.im); }
    friend Cyc12 operator-(const Cyc12 &x) { return Cyc12(-x.re, -x.im); }
    friend Cyc12 operator*(const Cyc12 &x, const Cyc12 &y) {
        return Cyc12(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    Cyc12 inv() const {
        // 1/z = conj_i(z) / (re^2 + im^2), denominator in Q(zeta3)
        Cyc n = re * re + im * im;
        Cyc12 c = conj_i();
        Cyc ni = n.inv();
        return Cyc12(c.re * ni, c.im * ni);
    }
    friend Cyc12 operator/(const Cyc12 &x, const Cyc12 &y) { return x * y.inv(); }
    friend bool operator==(const Cyc12 &x, const Cyc12 &y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const Cyc12 &x, const Cyc12 &y) { return !(x == y); }

    cplx to_complex() const { return re.to_complex() + cplx(0, 1) * im.to_complex(); }
};

} // namespace lgqc
