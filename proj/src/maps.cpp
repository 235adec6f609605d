#include "rfdyn/maps.hpp"

#include <stdexcept>

namespace rfdyn::maps {

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly q;
    Poly r = a;
    const int db = b.degree();
    if (r.degree() >= db) {
        q.c.assign(std::size_t(r.degree() - db) + 1, BigRat(0));
        while (!r.is_zero() && r.degree() >= db) {
            const int shift = r.degree() - db;
            const BigRat factor = r.lead() / b.lead();
            q.c[std::size_t(shift)] = factor;
            for (int i = 0; i <= db; ++i)
                r.c[std::size_t(i + shift)] -= factor * b.c[std::size_t(i)];
            r.trim();
        }
        q.trim();
    }
    return {std::move(q), std::move(r)};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const BigRat inv_lead = BigRat(1) / a.lead();
        a = a * inv_lead;
    }
    return a;
}

RationalMap::RationalMap(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("rational map with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    // Scale both polynomials to coprime integer coefficients.
    BigInt common_den = 1;
    const auto fold_den = [&common_den](const Poly& p) {
        for (const auto& v : p.c)
            common_den = lcm(common_den, denominator(v));
    };
    fold_den(num_);
    fold_den(den_);
    BigInt content = 0;
    const auto scale = [&](Poly& p) {
        for (auto& v : p.c) {
            v *= common_den;
            content = gcd(content, numerator(v));
        }
    };
    scale(num_);
    scale(den_);
    if (content > 1) {
        const BigRat inv(BigInt(1), content);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
    return RationalMap(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalMap operator-(const RationalMap& a) {
    return RationalMap(-a.num(), a.den());
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) {
    return a + (-b);
}

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
    return RationalMap(a.num() * b.num(), a.den() * b.den());
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero map");
    return RationalMap(a.num() * b.den(), a.den() * b.num());
}

RationalMap derivative(const RationalMap& m) {
    return RationalMap(
        derivative(m.num()) * m.den() - m.num() * derivative(m.den()),
        m.den() * m.den());
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    const RationalMap den = f.den().eval<RationalMap>(g);
    if (den.is_zero())
        throw std::invalid_argument("composition hits a constant pole");
    return f.num().eval<RationalMap>(g) / den;
}

RationalMap inv_f_derivative(unsigned k) {
    // (x-i)^{k+1} - (x+i)^{k+1}, scaled by (i/2)(-1)^k k!.
    const GaussPoly x_plus_i{GaussRat(BigRat(0), BigRat(1)), GaussRat(1)};
    const GaussPoly x_minus_i{GaussRat(BigRat(0), BigRat(-1)), GaussRat(1)};
    GaussPoly gnum = pow(x_minus_i, k + 1) - pow(x_plus_i, k + 1);

    BigRat kfact = 1;
    for (unsigned i = 2; i <= k; ++i) kfact *= i;
    GaussRat scale(BigRat(0), kfact / 2);  // (i/2) k!
    if (k % 2 == 1) scale = -scale;
    gnum = gnum * scale;

    Poly real_num;
    real_num.c.reserve(gnum.c.size());
    for (const auto& coeff : gnum.c) {
        if (coeff.im != 0)
            throw std::logic_error("imaginary parts failed to cancel");
        real_num.c.push_back(coeff.re);
    }
    real_num.trim();

    const Poly f_poly{BigRat(1), BigRat(0), BigRat(1)};  // x^2 + 1
    return RationalMap(std::move(real_num), pow(f_poly, k + 1));
}

RationalMap householder_map(unsigned k) {
    if (k < 1) throw std::invalid_argument("Householder order must be >= 1");
    const RationalMap ratio = inv_f_derivative(k - 1) / inv_f_derivative(k);
    return RationalMap::x() + RationalMap(BigRat(k)) * ratio;
}

RationalMap schroeder_first_map(unsigned order) {
    if (order != 2 && order != 3)
        throw OrderNotImplemented("Schroeder first kind implemented for orders 2 and 3 only");
    // f = x^2+1: a1 = f'(x) = 2x, a2 = f''(x)/2 = 1, a3 = f'''(x)/6 = 0.
    const RationalMap a1(Poly{BigRat(0), BigRat(2)}, Poly::constant(1));
    const auto coeffs = series_revert<RationalMap>(a1, RationalMap(1), RationalMap(0));
    const RationalMap dy(Poly{BigRat(-1), BigRat(0), BigRat(-1)}, Poly::constant(1));
    RationalMap out = RationalMap::x() + coeffs.A1 * dy;
    if (order == 3) out = out + coeffs.A2 * dy * dy;
    return out;
}

namespace {

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const BigRat& coeff = p.c[std::size_t(k)];
        if (coeff == 0) continue;
        const bool negative = coeff < 0;
        const BigInt magnitude = abs(numerator(coeff));  // canonical: integers
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        const bool unit = (magnitude == 1);
        if (!unit || k == 0) s += magnitude.str();
        if (k > 0) {
            if (!unit) s += " ";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace

std::string RationalMap::str() const {
    return "(" + render_poly(num_) + ")/(" + render_poly(den_) + ")";
}

}  // namespace rfdyn::maps
