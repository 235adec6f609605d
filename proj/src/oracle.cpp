#include "rfdyn/oracle.hpp"

#include <stdexcept>

namespace rfdyn::oracle {

MethodSpec MethodSpec::householder(unsigned k) {
    if (k < 1) throw std::invalid_argument("Householder order must be >= 1");
    return {MethodKind::Householder, k};
}

unsigned MethodSpec::multiplier() const {
    if (kind != MethodKind::Householder)
        throw std::logic_error("angle multiplier is defined for Householder methods only");
    return order + 1;
}

maps::RationalMap MethodSpec::one_step_map() const {
    switch (kind) {
        case MethodKind::Householder:
            return maps::householder_map(order);
        case MethodKind::Schroeder3:
            return maps::schroeder_first_map(3);
        case MethodKind::Secant:
            break;
    }
    throw std::logic_error("the secant method has no one-step map");
}

std::string MethodSpec::name() const {
    switch (kind) {
        case MethodKind::Householder:
            if (order == 1) return "newton";
            if (order == 2) return "halley";
            return "householder:" + std::to_string(order);
        case MethodKind::Secant:
            return "secant";
        case MethodKind::Schroeder3:
            return "schroeder3";
    }
    return "?";
}

BigFloat cot_hp(const BigFloat& t, unsigned digits) {
    if (digits < 10) throw std::invalid_argument("cot_hp needs digits >= 10");
    if (t == 0 || t == 1) throw PoleError(t.str(8));
    if (t < 0 || t > 1) throw std::invalid_argument("cot_hp angle outside (0,1)");
    PrecisionScope scope(digits + 10);
    if (t == BigFloat(0.5)) return BigFloat(0);
    const BigFloat pt = BigFloat(t) * pi_value(digits + 10);
    return cos(pt) / sin(pt);
}

BigFloat cot_hp(const RationalAngle& t, unsigned digits) {
    if (digits < 10) throw std::invalid_argument("cot_hp needs digits >= 10");
    if (t.is_zero()) throw PoleError("0");
    if (t.is_half()) return BigFloat(0);
    PrecisionScope scope(digits + 10);
    const BigFloat tf = to_bigfloat(t.value(), digits + 10);
    const BigFloat pt = tf * pi_value(digits + 10);
    return cos(pt) / sin(pt);
}

std::optional<BigFloat> closed_form_iterate(const MethodSpec& method, unsigned n,
                                            const RationalAngle& t0,
                                            const std::optional<RationalAngle>& t1,
                                            unsigned digits) {
    RationalAngle angle;
    switch (method.kind) {
        case MethodKind::Householder:
            angle = exactcore::shift_pow(t0, method.multiplier(), n);
            break;
        case MethodKind::Secant:
            if (!t1)
                throw std::invalid_argument("secant closed form needs theta0 and theta1");
            angle = exactcore::secant_angle(n, t0, *t1);
            break;
        case MethodKind::Schroeder3:
            throw NoClosedForm("Schroeder-3 admits no cotangent closed form");
    }
    if (angle.is_zero()) return std::nullopt;
    return cot_hp(angle, digits);
}

BigFloat verify_theorem(const MethodSpec& method, const RationalAngle& t0,
                        const std::optional<RationalAngle>& t1, unsigned n_max,
                        unsigned digits) {
    PrecisionScope scope(digits);
    BigFloat max_err = 0;

    if (method.kind == MethodKind::Householder) {
        const auto cls = exactcore::classify_orbit(t0, method.multiplier());
        if (cls.blows_up() && cls.blowup_step <= long(n_max))
            throw std::invalid_argument("orbit blows up at step " +
                                        std::to_string(cls.blowup_step));
        const maps::RationalMap map = method.one_step_map();
        BigFloat x = cot_hp(t0, digits);
        for (unsigned n = 0; n <= n_max; ++n) {
            const auto oracle = closed_form_iterate(method, n, t0, std::nullopt, digits);
            max_err = max(max_err, BigFloat(abs(x - *oracle)));
            if (n < n_max) x = maps::eval_map(map, x);
        }
        return max_err;
    }

    if (method.kind == MethodKind::Secant) {
        if (!t1) throw std::invalid_argument("secant verification needs theta0 and theta1");
        if (exactcore::secant_blowup_step(t0, *t1, long(n_max)).has_value())
            throw std::invalid_argument("secant orbit blows up before n_max");
        BigFloat prev = cot_hp(t0, digits);
        BigFloat curr = cot_hp(*t1, digits);
        const auto check = [&](unsigned n, const BigFloat& x) {
            const auto oracle = closed_form_iterate(method, n, t0, t1, digits);
            max_err = max(max_err, BigFloat(abs(x - *oracle)));
        };
        check(0, prev);
        if (n_max >= 1) check(1, curr);
        for (unsigned n = 2; n <= n_max; ++n) {
            BigFloat next = maps::secant_step(prev, curr);
            check(n, next);
            prev = std::move(curr);
            curr = std::move(next);
        }
        return max_err;
    }

    throw NoClosedForm("Schroeder-3 admits no cotangent closed form");
}

ComplexAngle complex_theta(const BigComplex& x0, unsigned digits) {
    if (x0.re == 0 && (x0.im == 1 || x0.im == -1))
        throw AtRoot("theta is undefined at the roots +-i");
    PrecisionScope scope(digits + 10);
    const BigComplex unit_i(BigFloat(0), BigFloat(1));
    const BigComplex v = (x0 - unit_i) / (x0 + unit_i);
    // theta = (i/2) log v, so alpha = -arg(v)/2 and beta = log|v|/2.
    const BigComplex lg = log(v);
    BigFloat alpha = -lg.im / 2;
    BigFloat beta = lg.re / 2;
    if (alpha < 0) alpha += pi_value(digits + 10);
    return {std::move(alpha), std::move(beta)};
}

DeviationPair deviation_pair(unsigned k, unsigned n, const ComplexAngle& theta,
                             unsigned digits) {
    PrecisionScope scope(digits + 10);
    const BigInt mpow = boost::multiprecision::pow(BigInt(k + 1), n);
    const BigFloat scale = to_bigfloat(mpow, digits + 10);
    const BigFloat a = theta.alpha * scale;
    const BigFloat b = theta.beta * scale;
    const BigComplex s = sin(BigComplex(a, b));
    if (s == BigComplex(0)) throw PoleError("sin((k+1)^n theta) = 0");
    DeviationPair out;
    out.plus = exp(BigComplex(-b, a)) / s;
    out.minus = exp(BigComplex(b, -a)) / s;
    return out;
}

Basin predict_basin(const BigComplex& x0) {
    if (x0.im > 0) return Basin::PlusI;
    if (x0.im < 0) return Basin::MinusI;
    return Basin::RealLine;
}

Basin predict_basin(std::complex<double> x0) {
    if (x0.imag() > 0) return Basin::PlusI;
    if (x0.imag() < 0) return Basin::MinusI;
    return Basin::RealLine;
}

std::string to_string(Basin b) {
    switch (b) {
        case Basin::PlusI: return "+i";
        case Basin::MinusI: return "-i";
        case Basin::RealLine: return "real line";
    }
    return "?";
}

}  // namespace rfdyn::oracle
