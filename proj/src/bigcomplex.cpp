#include "rfdyn/bigcomplex.hpp"

namespace rfdyn {

std::string to_string(const BigComplex& z, unsigned digits) {
    const auto part = [digits](const BigFloat& v) {
        return v.str(static_cast<std::streamsize>(digits));
    };
    if (z.im == 0) return part(z.re);
    std::string s;
    if (z.re != 0) s = part(z.re);
    if (z.im < 0) {
        s += s.empty() ? "-" : " - ";
        s += part(-z.im);
    } else {
        if (!s.empty()) s += " + ";
        s += part(z.im);
    }
    s += "i";
    return s;
}

}  // namespace rfdyn
