#include "rfdyn/bignum.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace rfdyn {

BigFloat to_bigfloat(const BigRat& q, unsigned digits) {
    // Boost's generic rational-to-mpfr conversion is unusably slow for the
    // variable-precision backend; integer conversion plus one division is
    // exact to 1 ulp and fast.
    PrecisionScope scope(digits);
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

BigFloat to_bigfloat(const BigInt& n, unsigned digits) {
    PrecisionScope scope(digits);
    return BigFloat(n);
}

BigFloat pi_value(unsigned digits) {
    PrecisionScope scope(digits);
    return boost::math::constants::pi<BigFloat>();
}

BigFloat round_decimal(const BigFloat& x, unsigned digits) {
    PrecisionScope scope(digits + 20);
    if (x == 0) return BigFloat(0);
    // String round-trip: mpfr renders correctly rounded decimal digits.
    const std::string s = x.str(static_cast<std::streamsize>(digits),
                                std::ios_base::scientific);
    return BigFloat(s);
}

std::string to_decimal_string(const BigFloat& x) {
    return x.str(0, std::ios_base::scientific);
}

BigInt floor_rat(const BigRat& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);  // always > 0 for cpp_rational
    BigInt t = n / d;           // truncates toward zero
    if (n < 0 && t * d != n) --t;
    return t;
}

}  // namespace rfdyn
