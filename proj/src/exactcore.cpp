#include "rfdyn/exactcore.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace rfdyn::exactcore {

namespace {

constexpr std::uint64_t kWordLimit = (std::uint64_t(1) << 32) - 1;

// Brent cycle detection: returns (preperiod, prime period) of the orbit of
// x0 under f on a finite state space.
template <class State, class StepFn>
std::pair<long, long> brent_cycle(const State& x0, StepFn f) {
    long power = 1, lam = 1;
    State tortoise = x0;
    State hare = f(x0);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = f(hare);
        ++lam;
    }
    State front = x0;
    State back = x0;
    for (long i = 0; i < lam; ++i) back = f(back);
    long mu = 0;
    while (front != back) {
        front = f(front);
        back = f(back);
        ++mu;
    }
    return {mu, lam};
}

// Shift-orbit classification over a fixed denominator d: state v encodes
// the angle v/d, the step is v -> m*v mod d. Zero is a fixed state, so the
// first zero is exactly the cycle entry of a blow-up orbit.
template <class UInt, class StepFn>
OrbitClass classify_shift_states(const UInt& v0, const UInt& d, StepFn step) {
    auto [mu, lam] = brent_cycle(v0, step);
    UInt s = v0;
    for (long i = 0; i < mu; ++i) s = step(s);
    OrbitClass out = (s == 0) ? OrbitClass::make_blowup(mu)
                              : OrbitClass::make_periodic(mu, lam);
    if (d % 2 == 0) {
        const UInt half = d / 2;
        UInt v = v0;
        const long limit = mu + lam;
        for (long n = 0; n < limit; ++n) {
            if (v == half) {
                out.zero_iterate_step = n;
                break;
            }
            v = step(v);
        }
    }
    return out;
}

}  // namespace

std::string RationalAngle::str() const {
    return num_.str() + "/" + den_.str();
}

RationalAngle RationalAngle::from_rational(const BigRat& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);  // > 0 and coprime to n
    n %= d;
    if (n < 0) n += d;
    RationalAngle t;
    t.num_ = std::move(n);
    t.den_ = std::move(d);
    return t;
}

RationalAngle make_angle(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidAngle("angle denominator is zero");
    if (den < 0) return RationalAngle::from_rational(BigRat(-num, -den));
    return RationalAngle::from_rational(BigRat(num, den));
}

RationalAngle shift(const RationalAngle& t, const BigInt& m) {
    return RationalAngle::from_rational(BigRat(m * t.num(), t.den()));
}

RationalAngle shift_pow(const RationalAngle& t, const BigInt& m, const BigInt& n) {
    const BigInt& d = t.den();
    BigInt f = boost::multiprecision::powm(m % d, n, d);
    return RationalAngle::from_rational(BigRat(f * t.num(), d));
}

bool operator==(const OrbitClass& a, const OrbitClass& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == OrbitClass::Kind::BlowsUp) return a.blowup_step == b.blowup_step;
    return a.preperiod == b.preperiod && a.period == b.period;
}

std::string to_string(const OrbitClass& c) {
    if (c.blows_up()) return "blows up at step " + std::to_string(c.blowup_step);
    return "eventually periodic, preperiod " + std::to_string(c.preperiod) +
           ", period " + std::to_string(c.period);
}

OrbitClass classify_orbit(const RationalAngle& t0, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("shift multiplier must be >= 2");
    const BigInt& d = t0.den();
    if (d <= kWordLimit && m <= kWordLimit) {
        const auto d64 = d.convert_to<std::uint64_t>();
        const auto m64 = m.convert_to<std::uint64_t>();
        const auto v0 = t0.num().convert_to<std::uint64_t>();
        return classify_shift_states<std::uint64_t>(
            v0, d64, [m64, d64](std::uint64_t v) { return (m64 * v) % d64; });
    }
    return classify_shift_states<BigInt>(
        t0.num(), d, [&m, &d](const BigInt& v) { return BigInt((m * v) % d); });
}

OrbitClass predict_orbit(const RationalAngle& t0, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("shift multiplier must be >= 2");
    const BigInt& den = t0.den();

    BigInt d2 = den;
    BigInt g = gcd(d2, m);
    while (g > 1) {
        while (d2 % g == 0) d2 /= g;
        g = gcd(d2, m);
    }
    const BigInt d1 = den / d2;

    if (d2 == 1) {
        long n = 0;
        BigInt r = 1 % den;
        while (r != 0) {
            r = (r * m) % den;
            ++n;
        }
        return OrbitClass::make_blowup(n);
    }

    long period = 1;
    BigInt r = m % d2;
    while (r != 1) {
        r = (r * m) % d2;
        ++period;
    }
    // m^n ≡ m^{n+period} (mod den) reduces to d1 | m^n: every prime of d1
    // divides m, so m^period - 1 is a unit modulo each of them.
    long pre = 0;
    BigInt s = 1 % d1;
    while (s != 0) {
        s = (s * m) % d1;
        ++pre;
    }
    return OrbitClass::make_periodic(pre, period);
}

namespace {

template <class UInt, class MulFn, class DivFn>
DigitExpansion digits_impl(const UInt& r0, unsigned base, std::size_t max_len,
                           MulFn mul_mod, DivFn mul_div) {
    auto [mu, lam] = brent_cycle(r0, mul_mod);
    UInt s = r0;
    for (long i = 0; i < mu; ++i) s = mul_mod(s);
    const bool terminating = (s == 0);
    const std::size_t need = terminating ? std::size_t(mu)
                                         : std::size_t(mu) + std::size_t(lam);
    if (need > max_len)
        throw RepetendNotFound("expansion needs " + std::to_string(need) +
                               " digits, max_len is " + std::to_string(max_len));

    DigitExpansion e;
    e.base = base;
    UInt r = r0;
    for (long i = 0; i < mu; ++i) {
        e.prefix.push_back(mul_div(r));
        r = mul_mod(r);
    }
    if (!terminating) {
        for (long i = 0; i < lam; ++i) {
            e.repetend.push_back(mul_div(r));
            r = mul_mod(r);
        }
    }
    return e;
}

}  // namespace

DigitExpansion digits(const RationalAngle& t, unsigned base, std::size_t max_len) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    const BigInt& d = t.den();
    if (d <= kWordLimit && base <= kWordLimit) {
        const auto d64 = d.convert_to<std::uint64_t>();
        const auto b64 = std::uint64_t(base);
        const auto r0 = t.num().convert_to<std::uint64_t>();
        return digits_impl<std::uint64_t>(
            r0, base, max_len,
            [b64, d64](std::uint64_t r) { return (r * b64) % d64; },
            [b64, d64](std::uint64_t r) { return unsigned((r * b64) / d64); });
    }
    return digits_impl<BigInt>(
        t.num(), base, max_len,
        [&](const BigInt& r) { return BigInt((r * base) % d); },
        [&](const BigInt& r) { return BigInt((r * base) / d).convert_to<unsigned>(); });
}

std::string DigitExpansion::str() const {
    if (prefix.empty() && repetend.empty()) return "0";
    const auto render = [this](const std::vector<unsigned>& ds) {
        std::string s;
        for (unsigned d : ds) {
            if (base <= 36) {
                s += d < 10 ? char('0' + d) : char('a' + (d - 10));
            } else {
                if (!s.empty()) s += '.';
                s += std::to_string(d);
            }
        }
        return s;
    };
    std::string s = "0." + render(prefix);
    if (!repetend.empty()) s += "(" + render(repetend) + ")";
    return s;
}

BigRat expansion_value(const DigitExpansion& e) {
    BigInt prefix_int = 0;
    for (unsigned d : e.prefix) prefix_int = prefix_int * e.base + d;
    BigInt scale = 1;
    for (std::size_t i = 0; i < e.prefix.size(); ++i) scale *= e.base;
    BigRat v(prefix_int, scale);
    if (!e.repetend.empty()) {
        BigInt rep_int = 0;
        BigInt rep_scale = 1;
        for (unsigned d : e.repetend) {
            rep_int = rep_int * e.base + d;
            rep_scale *= e.base;
        }
        v += BigRat(rep_int, (rep_scale - 1) * scale);
    }
    return v;
}

BigInt fib(unsigned n) {
    BigInt a = 0, b = 1;  // F(0), F(1)
    for (unsigned i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

RationalAngle secant_angle(unsigned n, const RationalAngle& t0, const RationalAngle& t1) {
    BigInt fprev = 1, fcur = 0;  // F(-1), F(0)
    for (unsigned i = 0; i < n; ++i) {
        BigInt next = fprev + fcur;
        fprev = std::move(fcur);
        fcur = std::move(next);
    }
    return RationalAngle::from_rational(fprev * t0.value() + fcur * t1.value());
}

namespace {

// Common denominator form of a secant angle pair: angles a/L and b/L.
struct PairOverL {
    BigInt a, b, L;
};

PairOverL common_denominator(const RationalAngle& t0, const RationalAngle& t1) {
    PairOverL p;
    const BigInt g = gcd(t0.den(), t1.den());
    p.L = (t0.den() / g) * t1.den();
    p.a = t0.num() * (p.L / t0.den());
    p.b = t1.num() * (p.L / t1.den());
    return p;
}

template <class UInt>
std::optional<long> secant_blowup_impl(UInt a, UInt b, UInt L, long max_n) {
    // Tracks (F(N-1), F(N)) mod L and evaluates F(N-1)*a + F(N)*b mod L.
    UInt fprev = 1 % L, fcur = 0;
    for (long n = 0; n <= max_n; ++n) {
        UInt val = (fprev * a) % L;
        val = (val + (fcur * b) % L) % L;
        if (val == 0) return n;
        UInt next = (fprev + fcur) % L;
        fprev = fcur;
        fcur = next;
    }
    return std::nullopt;
}

template <class UInt>
OrbitClass classify_secant_impl(UInt a, UInt b, UInt L) {
    std::optional<long> zero_hit;
    const bool has_half = (L % 2 == 0);
    const UInt half = has_half ? L / 2 : UInt(0);
    const auto note_half = [&](const UInt& v, long n) {
        if (has_half && !zero_hit && v == half) zero_hit = n;
    };
    const auto finish = [&](OrbitClass c) {
        c.zero_iterate_step = zero_hit;
        return c;
    };

    note_half(a, 0);
    if (a == 0) return finish(OrbitClass::make_blowup(0));
    note_half(b, 1);
    if (b == 0) return finish(OrbitClass::make_blowup(1));

    // The pair map (x,y) -> (y, x+y) mod L is invertible, so a non-blow-up
    // orbit returns to its initial pair; its period divides the Pisano
    // period of L, which is at most 6L.
    UInt prev = a, cur = b;
    const BigInt bound = BigInt(L) * 6 + 4;
    for (long n = 2;; ++n) {
        UInt next = (prev + cur) % L;
        note_half(next, n);
        if (next == 0) return finish(OrbitClass::make_blowup(n));
        prev = cur;
        cur = next;
        if (prev == a && cur == b) return finish(OrbitClass::make_periodic(0, n - 1));
        if (BigInt(n) > bound)
            throw std::logic_error("secant pair orbit failed to close");
    }
}

}  // namespace

std::optional<long> secant_blowup_step(const RationalAngle& t0,
                                       const RationalAngle& t1,
                                       long max_n) {
    const PairOverL p = common_denominator(t0, t1);
    if (p.L <= kWordLimit) {
        return secant_blowup_impl<std::uint64_t>(
            p.a.convert_to<std::uint64_t>(), p.b.convert_to<std::uint64_t>(),
            p.L.convert_to<std::uint64_t>(), max_n);
    }
    return secant_blowup_impl<BigInt>(p.a, p.b, p.L, max_n);
}

OrbitClass classify_secant_orbit(const RationalAngle& t0, const RationalAngle& t1) {
    const PairOverL p = common_denominator(t0, t1);
    if (p.L <= kWordLimit) {
        return classify_secant_impl<std::uint64_t>(
            p.a.convert_to<std::uint64_t>(), p.b.convert_to<std::uint64_t>(),
            p.L.convert_to<std::uint64_t>());
    }
    return classify_secant_impl<BigInt>(p.a, p.b, p.L);
}

}  // namespace rfdyn::exactcore
