#pragma once

#include <stdexcept>
#include <string>

namespace rfdyn {

// Base class for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// make_angle with a zero denominator.
struct InvalidAngle : Error {
    using Error::Error;
};

// Digit expansion did not close within the requested length budget.
struct RepetendNotFound : Error {
    using Error::Error;
};

// Evaluation hit a pole (zero denominator). `at` is a textual rendering of
// the offending point.
struct PoleError : Error {
    explicit PoleError(std::string at_repr)
        : Error("pole at x = " + at_repr), at(std::move(at_repr)) {}
    std::string at;
};

// secant_step with x_prev + x_curr = 0, i.e. f(x_n) = f(x_{n-1}).
struct SecantPoleError : Error {
    using Error::Error;
};

// series_revert with a1 = 0.
struct NotInvertible : Error {
    using Error::Error;
};

// schroeder_first_map outside the supported orders {2, 3}.
struct OrderNotImplemented : Error {
    using Error::Error;
};

// Closed-form iterate requested for a method that has none (Schroeder-3).
struct NoClosedForm : Error {
    using Error::Error;
};

// Drift report requested for a method without an oracle (Schroeder-3).
struct NoOracle : Error {
    using Error::Error;
};

// complex_theta at a root x0 = +i or -i.
struct AtRoot : Error {
    using Error::Error;
};

// newton_disguise on a denominator with a pole of order > 2.
struct UnsupportedMultiplicity : Error {
    using Error::Error;
};

// newton_disguise on x - H(x) identically zero or constant.
struct DegenerateIteration : Error {
    using Error::Error;
};

// singularity_exponent on a map with deg num != deg den + 1.
struct NotApplicable : Error {
    using Error::Error;
};

// CLI angle literal that is neither "p/q", a decimal, nor "sqrtN[/M]".
struct AngleParseError : Error {
    using Error::Error;
};

}  // namespace rfdyn
