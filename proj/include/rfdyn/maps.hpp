#pragma once

#include "rfdyn/bigcomplex.hpp"
#include "rfdyn/bignum.hpp"
#include "rfdyn/errors.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace rfdyn::maps {

class RationalMap;

namespace detail {

// Rational-to-float conversions split numerator and denominator: boost's
// generic rational interconversion is far too slow for the variable
// precision mpfr backend.
inline BigFloat rat_to_float(const BigRat& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

template <class V, class K>
V coeff_cast(const K& k) {
    if constexpr (std::is_same_v<V, K>) {
        return k;
    } else if constexpr (std::is_same_v<K, BigRat> && std::is_same_v<V, BigFloat>) {
        return rat_to_float(k);
    } else if constexpr (std::is_same_v<K, BigRat> && std::is_same_v<V, BigComplex>) {
        return BigComplex(rat_to_float(k));
    } else if constexpr (std::is_same_v<V, BigComplex>) {
        return BigComplex(BigFloat(k));
    } else if constexpr (std::is_same_v<V, double>) {
        return k.template convert_to<double>();
    } else if constexpr (std::is_same_v<V, std::complex<double>>) {
        return std::complex<double>(k.template convert_to<double>(), 0.0);
    } else {
        return V(k);
    }
}

template <class V>
std::string value_repr(const V& x) {
    if constexpr (std::is_same_v<V, BigComplex>) {
        return to_string(x, 8);
    } else if constexpr (std::is_same_v<V, double>) {
        return std::to_string(x);
    } else if constexpr (std::is_same_v<V, std::complex<double>>) {
        return std::to_string(x.real()) + "+" + std::to_string(x.imag()) + "i";
    } else if constexpr (std::is_same_v<V, BigFloat>) {
        return x.str(8);
    } else {
        return x.str();
    }
}

}  // namespace detail

// Dense univariate polynomial over an exact field K. Coefficients ascend by
// degree and carry no trailing zeros; the zero polynomial is empty.
template <class K>
struct PolyT {
    std::vector<K> c;

    PolyT() = default;
    PolyT(std::initializer_list<K> coeffs) : c(coeffs) { trim(); }
    explicit PolyT(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    static PolyT zero() { return {}; }
    static PolyT constant(K v) {
        PolyT p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }
    static PolyT x() {
        PolyT p;
        p.c = {K(0), K(1)};
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(0); }
    const K& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    template <class V>
    V eval(const V& at) const {
        V acc = V(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * at + detail::coeff_cast<V>(*it);
        return acc;
    }

    bool operator==(const PolyT&) const = default;
};

template <class K>
PolyT<K> operator+(const PolyT<K>& a, const PolyT<K>& b) {
    std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] + b.c[i];
    return PolyT<K>(std::move(out));
}

template <class K>
PolyT<K> operator-(const PolyT<K>& a) {
    PolyT<K> out = a;
    for (auto& v : out.c) v = -v;
    return out;
}

template <class K>
PolyT<K> operator-(const PolyT<K>& a, const PolyT<K>& b) {
    return a + (-b);
}

template <class K>
PolyT<K> operator*(const PolyT<K>& a, const PolyT<K>& b) {
    if (a.is_zero() || b.is_zero()) return PolyT<K>::zero();
    std::vector<K> out(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return PolyT<K>(std::move(out));
}

template <class K>
PolyT<K> operator*(const PolyT<K>& a, const K& s) {
    PolyT<K> out = a;
    for (auto& v : out.c) v = v * s;
    out.trim();
    return out;
}

template <class K>
PolyT<K> pow(const PolyT<K>& a, unsigned n) {
    PolyT<K> out = PolyT<K>::constant(K(1));
    for (unsigned i = 0; i < n; ++i) out = out * a;
    return out;
}

template <class K>
PolyT<K> derivative(const PolyT<K>& p) {
    if (p.c.size() <= 1) return PolyT<K>::zero();
    std::vector<K> out(p.c.size() - 1, K(0));
    for (std::size_t i = 1; i < p.c.size(); ++i) out[i - 1] = p.c[i] * K(int(i));
    return PolyT<K>(std::move(out));
}

// Exact Gaussian rational a + bi; the intermediate coefficient ring of the
// partial-fraction derivative construction.
struct GaussRat {
    BigRat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}  // NOLINT: ring literal
    GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussRat&) const = default;
};

inline GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
}
inline GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
inline GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
}
inline GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using Poly = PolyT<BigRat>;
using GaussPoly = PolyT<GaussRat>;

// Exact division with remainder over the rationals; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd via the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b);

// Ratio of two polynomials with exact rational coefficients, kept in a
// canonical form: gcd removed, coefficients scaled to coprime integers, and
// the denominator's leading coefficient positive. Equality of canonical
// forms is plain coefficient equality.
class RationalMap {
public:
    RationalMap() : num_(), den_(Poly::constant(1)) {}
    RationalMap(int v) : RationalMap(BigRat(v)) {}  // NOLINT: field literal
    explicit RationalMap(const BigRat& v)
        : num_(Poly::constant(v)), den_(Poly::constant(1)) {}
    RationalMap(Poly num, Poly den);

    static RationalMap x() { return RationalMap(Poly::x(), Poly::constant(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Horner evaluation of num and den; PoleError if the denominator
    // vanishes at x (the blow-up event).
    template <class V>
    V eval(const V& at) const {
        V d = den_.eval(at);
        if (d == V(0)) throw PoleError(detail::value_repr(at));
        return num_.eval(at) / d;
    }

    // Canonical text form "(x^3 - 3 x)/(3 x^2 - 1)".
    std::string str() const;

    bool operator==(const RationalMap&) const = default;

private:
    Poly num_, den_;
};

RationalMap operator+(const RationalMap& a, const RationalMap& b);
RationalMap operator-(const RationalMap& a);
RationalMap operator-(const RationalMap& a, const RationalMap& b);
RationalMap operator*(const RationalMap& a, const RationalMap& b);
RationalMap operator/(const RationalMap& a, const RationalMap& b);

// (num' den - num den')/den^2, reduced.
RationalMap derivative(const RationalMap& m);

// f(g(x)) as a reduced rational map.
RationalMap compose(const RationalMap& f, const RationalMap& g);

// k-th derivative of 1/(x^2+1), built from the partial-fraction form
// (i/2)(-1)^k k! [(x+i)^{-(k+1)} - (x-i)^{-(k+1)}] over Gaussian rationals;
// the imaginary parts cancel exactly and the real reduced map is returned.
RationalMap inv_f_derivative(unsigned k);

// Householder iteration of order k >= 1 for f = x^2+1:
// x + k*(1/f)^(k-1) / (1/f)^(k). k=1 is Newton, k=2 is Halley.
RationalMap householder_map(unsigned k);

template <class F>
struct ReversionCoeffsT {
    F A1, A2, A3;
};
using ReversionCoeffs = ReversionCoeffsT<BigRat>;

// Reversion of y = a1 dx + a2 dx^2 + a3 dx^3 + O(dx^4) through third order:
// dx = A1 dy + A2 dy^2 + A3 dy^3 + O(dy^4). Works over any exact field,
// including rational maps (used symbolically by schroeder_first_map).
template <class F>
ReversionCoeffsT<F> series_revert(const F& a1, const F& a2, const F& a3) {
    if (a1 == F(0)) throw NotInvertible("series reversion needs a1 != 0");
    const F a1sq = a1 * a1;
    const F a1_5 = a1sq * a1sq * a1;
    F A1 = F(1) / a1;
    F A2 = F(0) - a2 / (a1sq * a1);
    F A3 = (F(2) * (a2 * a2) - a1 * a3) / a1_5;
    return {std::move(A1), std::move(A2), std::move(A3)};
}

// Schroeder's first-kind iteration for f = x^2+1. Order 2 is Newton's map;
// order 3 is (3x^4 - 6x^2 - 1)/(8x^3). Higher orders would need reversion
// coefficients beyond A3 and are not implemented.
RationalMap schroeder_first_map(unsigned order);

// One secant step (x_curr*x_prev - 1)/(x_curr + x_prev), generic over the
// numeric kind (exact rational, big-float, complex).
template <class T>
T secant_step(const T& x_prev, const T& x_curr) {
    const T den = x_curr + x_prev;
    if (den == T(0))
        throw SecantPoleError("secant step undefined: x_n + x_{n-1} = 0");
    return (x_curr * x_prev - T(1)) / den;
}

template <class V>
V eval_map(const RationalMap& m, const V& at) {
    return m.eval(at);
}

}  // namespace rfdyn::maps
