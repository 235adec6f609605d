#pragma once

#include "rfdyn/bignum.hpp"

#include <string>
#include <utility>

namespace rfdyn {

// Complex number over BigFloat. The environment ships MPFR without MPC, so
// the handful of complex operations needed here are written out directly.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(BigFloat r) : re(std::move(r)), im(0) {}
    explicit BigComplex(int r) : re(r), im(0) {}

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }

inline BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return {s * z.re, s * z.im};
}
inline BigComplex operator*(const BigComplex& z, const BigFloat& s) { return s * z; }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    // MPFR's exponent range makes the naive formula safe.
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline BigComplex operator/(const BigComplex& a, const BigFloat& s) {
    return {a.re / s, a.im / s};
}

inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
}

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch: Im(log z) in (-pi, pi].
inline BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

inline BigComplex sin(const BigComplex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline BigComplex cos(const BigComplex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

inline BigComplex cot(const BigComplex& z) { return cos(z) / sin(z); }

// Principal-branch power, z != 0.
inline BigComplex pow(const BigComplex& z, const BigComplex& w) {
    return exp(w * log(z));
}

// "a+bi" / "a-bi" with `digits` significant digits per component.
std::string to_string(const BigComplex& z, unsigned digits = 6);

}  // namespace rfdyn
