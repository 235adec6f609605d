#pragma once

#include "rfdyn/bignum.hpp"
#include "rfdyn/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rfdyn::exactcore {

// Angle as an exact fraction of pi: t = num/den represents theta = t*pi,
// reduced, with 0 <= t < 1. The zero angle is admitted; it is the "already
// blown up" state of the shift dynamics.
class RationalAngle {
public:
    RationalAngle() : num_(0), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    BigRat value() const { return BigRat(num_, den_); }

    bool is_zero() const { return num_ == 0; }
    // Reduced form means the angle pi/2 is exactly 1/2.
    bool is_half() const { return num_ == 1 && den_ == 2; }

    std::string str() const;

    bool operator==(const RationalAngle&) const = default;
    bool operator<(const RationalAngle& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }

    // Reduce q mod 1 into [0,1).
    static RationalAngle from_rational(const BigRat& q);

private:
    BigInt num_, den_;
};

// num/den reduced into [0,1); den = 0 raises InvalidAngle.
RationalAngle make_angle(const BigInt& num, const BigInt& den);

// The Bernoulli shift: (m*t) mod 1.
RationalAngle shift(const RationalAngle& t, const BigInt& m);

// (m^n * t) mod 1 via modular exponentiation, so n can be large.
RationalAngle shift_pow(const RationalAngle& t, const BigInt& m, const BigInt& n);

// Verdict for a rational-angle orbit. Equality compares the classification
// (kind, blow-up step, preperiod, period) only; zero_iterate_step is
// auxiliary and filled in by the simulating classifiers alone.
struct OrbitClass {
    enum class Kind { BlowsUp, EventuallyPeriodic };

    Kind kind;
    long blowup_step = -1;  // minimal n with theta_n = 0 (BlowsUp only)
    long preperiod = 0;     // steps before the cycle (EventuallyPeriodic only)
    long period = 0;        // prime period (EventuallyPeriodic only)

    // First step whose angle is 1/2, i.e. whose iterate is x = 0 (the
    // spurious zero of odd multipliers).
    std::optional<long> zero_iterate_step;

    bool blows_up() const { return kind == Kind::BlowsUp; }
    bool contains_zero_iterate() const { return zero_iterate_step.has_value(); }

    static OrbitClass make_blowup(long step) {
        OrbitClass c;
        c.kind = Kind::BlowsUp;
        c.blowup_step = step;
        return c;
    }
    static OrbitClass make_periodic(long preperiod, long period) {
        OrbitClass c;
        c.kind = Kind::EventuallyPeriodic;
        c.preperiod = preperiod;
        c.period = period;
        return c;
    }
};

bool operator==(const OrbitClass& a, const OrbitClass& b);
std::string to_string(const OrbitClass& c);

// Simulates the shift map t -> (m*t) mod 1 with cycle detection on exact
// angles. Terminates within den(t0)+1 distinct states.
OrbitClass classify_orbit(const RationalAngle& t0, const BigInt& m);

// Number-theoretic prediction without simulation. Splitting den = d1*d2 with
// d1 carrying exactly the primes shared with m and gcd(d2, m) = 1: the orbit
// blows up iff d2 = 1 (at the minimal n with den | m^n), otherwise the prime
// period is the multiplicative order of m mod d2 and the preperiod is the
// minimal n with d1 | m^n. Always agrees with classify_orbit.
OrbitClass predict_orbit(const RationalAngle& t0, const BigInt& m);

// Exact positional expansion of t in the given base: prefix digits followed
// by a primitive repetend (empty repetend = terminating expansion).
struct DigitExpansion {
    unsigned base = 10;
    std::vector<unsigned> prefix;
    std::vector<unsigned> repetend;

    bool terminating() const { return repetend.empty(); }
    // "0.01", "0.(01)", "0.0(02)"; digits beyond 9 use letters (base <= 36).
    std::string str() const;
};

// Long division with remainder-cycle detection. RepetendNotFound if prefix
// plus repetend would exceed max_len digits (their total is bounded by
// den(t), so max_len = den(t) always suffices).
DigitExpansion digits(const RationalAngle& t, unsigned base, std::size_t max_len);

// Exact fraction reconstructed from an expansion (inverse of digits()).
BigRat expansion_value(const DigitExpansion& e);

// F(0)=0, F(1)=F(2)=1.
BigInt fib(unsigned n);

// Two consecutive angles of a secant orbit.
struct SecantAngleState {
    RationalAngle prev, curr;
};

// theta_n = (F(n-1)*t0 + F(n)*t1) mod 1, with F(-1) = 1, so that n=0 gives
// t0, n=1 gives t1 and the Fibonacci angle recurrence holds from there.
RationalAngle secant_angle(unsigned n, const RationalAngle& t0, const RationalAngle& t1);

// Minimal N <= max_n with F(N-1)*t0 + F(N)*t1 = 0 mod 1, computed along the
// Fibonacci coefficient recurrence (the closed-form route, independent of
// pair-state simulation).
std::optional<long> secant_blowup_step(const RationalAngle& t0,
                                       const RationalAngle& t1,
                                       long max_n);

// Pair-state simulation of (theta_{n-1}, theta_n). The pair map is
// invertible, so non-blow-up orbits are purely periodic (preperiod 0).
OrbitClass classify_secant_orbit(const RationalAngle& t0, const RationalAngle& t1);

}  // namespace rfdyn::exactcore
