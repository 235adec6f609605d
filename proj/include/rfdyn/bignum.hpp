#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace rfdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Arbitrary-precision binary float (MPFR). Precision travels with values:
// copies keep the precision of their source and arithmetic results take the
// widest operand, so seeding inputs at the right precision is enough.
using BigFloat = boost::multiprecision::mpfr_float;

// Sets the thread's default BigFloat precision (decimal digits) for the
// lifetime of the scope. Fresh values constructed inside inherit it.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned decimal_digits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(decimal_digits);
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

BigFloat to_bigfloat(const BigRat& q, unsigned digits);
BigFloat to_bigfloat(const BigInt& n, unsigned digits);

// pi at the requested number of decimal digits.
BigFloat pi_value(unsigned digits);

// x rounded to `digits` significant decimal digits. The result carries
// binary guard precision well beyond `digits` so that downstream arithmetic
// does not round it again.
BigFloat round_decimal(const BigFloat& x, unsigned digits);

// Scientific rendering with every working digit (CSV contract).
std::string to_decimal_string(const BigFloat& x);

// floor(q) as an exact integer.
BigInt floor_rat(const BigRat& q);

}  // namespace rfdyn
