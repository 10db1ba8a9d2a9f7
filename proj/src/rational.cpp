#include "psval/rational.hpp"

#include <sstream>

namespace psval {

std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto sn = exact_isqrt(numerator(q));
    if (!sn) return std::nullopt;
    auto sd = exact_isqrt(denominator(q));
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace psval
