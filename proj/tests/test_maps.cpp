#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfdyn/maps.hpp"

#include <random>

using namespace rfdyn;
using namespace rfdyn::maps;

namespace {

const Poly kOne = Poly::constant(1);

RationalMap inv_f() {
    // 1/(x^2+1), the seed of the quotient-rule oracle
    return RationalMap(kOne, Poly{BigRat(1), BigRat(0), BigRat(1)});
}

BigRat rat(long n, long d = 1) { return BigRat(n, d); }

}  // namespace

TEST_CASE("inv_f_derivative matches repeated quotient-rule differentiation") {
    CHECK(inv_f_derivative(0) == inv_f());
    CHECK(inv_f_derivative(1) ==
          RationalMap(Poly{rat(0), rat(-2)},
                      Poly{rat(1), rat(0), rat(2), rat(0), rat(1)}));
    CHECK(inv_f_derivative(2) ==
          RationalMap(Poly{rat(-2), rat(0), rat(6)},
                      pow(Poly{rat(1), rat(0), rat(1)}, 3)));

    RationalMap oracle = inv_f();
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(inv_f_derivative(k) == oracle);
        oracle = derivative(oracle);
    }
}

TEST_CASE("inv_f_derivative stays real through k = 12") {
    for (unsigned k = 0; k <= 12; ++k) {
        const RationalMap d = inv_f_derivative(k);
        CHECK(d.num().degree() == int(k));
        CHECK(d.den().degree() == int(2 * (k + 1)));
    }
}

TEST_CASE("householder_map reproduces the printed maps") {
    CHECK(householder_map(1) ==
          RationalMap(Poly{rat(-1), rat(0), rat(1)}, Poly{rat(0), rat(2)}));
    CHECK(householder_map(2) ==
          RationalMap(Poly{rat(0), rat(-3), rat(0), rat(1)},
                      Poly{rat(-1), rat(0), rat(3)}));
    CHECK(householder_map(3) ==
          RationalMap(Poly{rat(1), rat(0), rat(-6), rat(0), rat(1)},
                      Poly{rat(0), rat(-4), rat(0), rat(4)}));
}

TEST_CASE("householder_map degrees and odd symmetry for k <= 8") {
    for (unsigned k = 1; k <= 8; ++k) {
        const RationalMap h = householder_map(k);
        REQUIRE(h.num().degree() == int(k) + 1);
        REQUIRE(h.den().degree() == int(k));
        // odd map: numerator holds only degrees of k+1's parity, denominator
        // only degrees of k's parity
        for (int i = 0; i <= h.num().degree(); ++i)
            if (unsigned(i) % 2 != (k + 1) % 2) CHECK(h.num().coeff(i) == 0);
        for (int i = 0; i <= h.den().degree(); ++i)
            if (unsigned(i) % 2 != k % 2) CHECK(h.den().coeff(i) == 0);
    }
}

TEST_CASE("two Newton steps compose to the order-3 map") {
    const RationalMap newton = householder_map(1);
    CHECK(compose(newton, newton) == householder_map(3));
}

TEST_CASE("fixed points: x*den - num is divisible by x^2+1") {
    const Poly f_poly{rat(1), rat(0), rat(1)};
    for (unsigned k = 1; k <= 8; ++k) {
        const RationalMap h = householder_map(k);
        const Poly p = Poly::x() * h.den() - h.num();
        const auto [q, r] = poly_divmod(p, f_poly);
        REQUIRE(r.is_zero());
        if (k == 1) CHECK(q.degree() == 0);  // Newton: fixed points are exactly +-i
    }
}

TEST_CASE("series_revert frozen examples") {
    const auto identity = series_revert<BigRat>(rat(1), rat(0), rat(0));
    CHECK(identity.A1 == 1);
    CHECK(identity.A2 == 0);
    CHECK(identity.A3 == 0);

    const auto a = series_revert<BigRat>(rat(2), rat(1), rat(0));
    CHECK(a.A1 == rat(1, 2));
    CHECK(a.A2 == rat(-1, 8));
    CHECK(a.A3 == rat(1, 16));

    const auto b = series_revert<BigRat>(rat(1), rat(1), rat(1));
    CHECK(b.A1 == 1);
    CHECK(b.A2 == -1);
    CHECK(b.A3 == 1);

    CHECK_THROWS_AS(series_revert<BigRat>(rat(0), rat(1), rat(1)), NotInvertible);
}

TEST_CASE("series_revert composition residual vanishes through order 3") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 9);
    int done = 0;
    while (done < 100) {
        const BigRat a1(num_dist(rng), den_dist(rng));
        if (a1 == 0) continue;
        const BigRat a2(num_dist(rng), den_dist(rng));
        const BigRat a3(num_dist(rng), den_dist(rng));
        const auto A = series_revert<BigRat>(a1, a2, a3);
        CHECK(A.A1 * a1 == 1);
        // composing dx(dy(dx)): coefficients of dx^2 and dx^3 must vanish
        CHECK(A.A1 * a2 + A.A2 * a1 * a1 == 0);
        CHECK(A.A1 * a3 + 2 * A.A2 * a1 * a2 + A.A3 * a1 * a1 * a1 == 0);
        // sign-converted closed form of the cubic coefficient
        const BigRat a1_5 = a1 * a1 * a1 * a1 * a1;
        CHECK(A.A3 == (2 * a2 * a2 - a1 * a3) / a1_5);
        ++done;
    }
}

TEST_CASE("schroeder_first_map") {
    CHECK(schroeder_first_map(2) == householder_map(1));
    CHECK(schroeder_first_map(3) ==
          RationalMap(Poly{rat(-1), rat(0), rat(-6), rat(0), rat(3)},
                      Poly{rat(0), rat(0), rat(0), rat(8)}));
    CHECK(schroeder_first_map(3).eval(BigRat(1)) == rat(-1, 2));
    CHECK_THROWS_AS(schroeder_first_map(4), OrderNotImplemented);
    CHECK_THROWS_AS(schroeder_first_map(1), OrderNotImplemented);
}

TEST_CASE("secant_step") {
    CHECK(secant_step(BigRat(1), BigRat(1)) == 0);
    CHECK(secant_step(BigRat(2), BigRat(3)) == 1);
    CHECK_THROWS_AS(secant_step(BigRat(1), BigRat(-1)), SecantPoleError);

    // cot(pi/8 + pi/2) = 1 - sqrt(2), from x_prev = cot(pi/8), x_curr = 0
    PrecisionScope scope(50);
    const BigFloat root2 = sqrt(BigFloat(2));
    const BigFloat stepped = secant_step(BigFloat(1) + root2, BigFloat(0));
    CHECK(abs(stepped - (BigFloat(1) - root2)) < BigFloat("1e-45"));
}

TEST_CASE("eval_map") {
    const RationalMap newton = householder_map(1);
    CHECK(eval_map(newton, BigRat(1)) == 0);
    CHECK_THROWS_AS(eval_map(newton, BigRat(0)), PoleError);

    PrecisionScope scope(50);
    const BigFloat root3 = sqrt(BigFloat(3));
    CHECK(abs(eval_map(householder_map(2), root3)) < BigFloat("1e-40"));
    CHECK_THROWS_AS(eval_map(newton, BigFloat(0)), PoleError);

    // complex evaluation: the roots +-i are fixed
    PrecisionScope scope40(40);
    const BigComplex i(BigFloat(0), BigFloat(1));
    const BigComplex at_i = eval_map(householder_map(2), i);
    CHECK(abs(at_i - i) < BigFloat("1e-35"));
}

TEST_CASE("canonical text form") {
    CHECK(householder_map(1).str() == "(x^2 - 1)/(2 x)");
    CHECK(householder_map(2).str() == "(x^3 - 3 x)/(3 x^2 - 1)");
    CHECK(householder_map(3).str() == "(x^4 - 6 x^2 + 1)/(4 x^3 - 4 x)");
    CHECK(schroeder_first_map(3).str() == "(3 x^4 - 6 x^2 - 1)/(8 x^3)");
    CHECK(RationalMap(Poly{rat(1), rat(2)}, Poly{rat(0), rat(0), rat(7)}).str() ==
          "(2 x + 1)/(7 x^2)");
    CHECK(RationalMap().str() == "(0)/(1)");
}

TEST_CASE("rational map arithmetic stays canonical") {
    const RationalMap h = householder_map(2);
    CHECK(h - h == RationalMap(0));
    CHECK(h / h == RationalMap(1));
    CHECK((h * RationalMap(2)) / RationalMap(2) == h);
    // reduction: (x^2-1)/(x-1) collapses to x+1
    const RationalMap reduced(Poly{rat(-1), rat(0), rat(1)}, Poly{rat(-1), rat(1)});
    CHECK(reduced == RationalMap(Poly{rat(1), rat(1)}, kOne));
    CHECK_THROWS_AS(RationalMap(kOne, Poly::zero()), std::invalid_argument);
    CHECK_THROWS_AS(h / RationalMap(0), std::invalid_argument);
}

TEST_CASE("derivative of a rational map") {
    // d/dx [(x^2-1)/(2x)] = (x^2+1)/(2x^2)
    CHECK(derivative(householder_map(1)) ==
          RationalMap(Poly{rat(1), rat(0), rat(1)}, Poly{rat(0), rat(0), rat(2)}));
}
