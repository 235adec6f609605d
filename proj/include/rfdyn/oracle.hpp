#pragma once

#include "rfdyn/bigcomplex.hpp"
#include "rfdyn/bignum.hpp"
#include "rfdyn/errors.hpp"
#include "rfdyn/exactcore.hpp"
#include "rfdyn/maps.hpp"

#include <complex>
#include <optional>
#include <string>

namespace rfdyn::oracle {

using exactcore::RationalAngle;

enum class MethodKind { Householder, Secant, Schroeder3 };

// The iteration under study. Householder carries its order k (k=1 is Newton,
// k=2 is Halley) and angle multiplier k+1; the secant method is two-point;
// Schroeder-3 has no closed form and exists here for the float lab.
struct MethodSpec {
    MethodKind kind = MethodKind::Householder;
    unsigned order = 1;

    static MethodSpec newton() { return {MethodKind::Householder, 1}; }
    static MethodSpec halley() { return {MethodKind::Householder, 2}; }
    static MethodSpec householder(unsigned k);
    static MethodSpec secant() { return {MethodKind::Secant, 0}; }
    static MethodSpec schroeder3() { return {MethodKind::Schroeder3, 0}; }

    bool is_two_point() const { return kind == MethodKind::Secant; }

    // Angle multiplier k+1 (Householder only).
    unsigned multiplier() const;

    // The one-step rational map (Householder and Schroeder-3).
    maps::RationalMap one_step_map() const;

    std::string name() const;
};

// cot(t*pi) with relative error below 10^(1-digits). Requires 0 < t < 1 and
// digits >= 10; t in {0,1} is a pole.
BigFloat cot_hp(const BigFloat& t, unsigned digits);

// Same, but the angle is converted at full guard precision first; the half
// angle returns exactly 0.
BigFloat cot_hp(const RationalAngle& t, unsigned digits);

// x_n from the closed form: the angle (multiplier^n * t0 mod 1, or the
// Fibonacci combination of t0 and t1) is reduced in exact arithmetic first,
// so n = 200 is as accurate as n = 2. Empty result = reduced angle 0, the
// predicted blow-up. Schroeder-3 raises NoClosedForm.
std::optional<BigFloat> closed_form_iterate(const MethodSpec& method, unsigned n,
                                            const RationalAngle& t0,
                                            const std::optional<RationalAngle>& t1,
                                            unsigned digits);

// Iterates the actual map in big-float from x0 = cot(t0*pi) (and x1 for the
// secant) and returns the maximum absolute deviation from the closed form
// over n <= n_max. The orbit must not blow up by n_max (checked).
BigFloat verify_theorem(const MethodSpec& method, const RationalAngle& t0,
                        const std::optional<RationalAngle>& t1, unsigned n_max,
                        unsigned digits);

// theta = alpha + i*beta with cot(theta) = x0, alpha in [0, pi). Computed
// from the principal branch of theta = (i/2) log((x-i)/(x+i)).
struct ComplexAngle {
    BigFloat alpha, beta;
};

ComplexAngle complex_theta(const BigComplex& x0, unsigned digits);

// Deviations of the n-th Householder iterate from the two roots:
// plus = x_n + i, minus = x_n - i, evaluated from the closed forms
// e^{-+ beta M} e^{+- i alpha M} / sin(M theta) with M = (k+1)^n.
struct DeviationPair {
    BigComplex plus, minus;
};

DeviationPair deviation_pair(unsigned k, unsigned n, const ComplexAngle& theta,
                             unsigned digits);

enum class Basin { PlusI, MinusI, RealLine };

// Half-plane rule: Im > 0 converges to +i, Im < 0 to -i, and real seeds
// stay real forever.
Basin predict_basin(const BigComplex& x0);
Basin predict_basin(std::complex<double> x0);

std::string to_string(Basin b);

}  // namespace rfdyn::oracle
