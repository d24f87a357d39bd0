#include "hybrid/rational.hpp"

namespace hybrid {

Rational rat_sqrt(const Rational& r) {
    if (r < 0) throw std::domain_error("rat_sqrt: negative argument");
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d)
        throw std::domain_error("rat_sqrt: not a perfect square: " + rat_to_string(r));
    return Rational(sn, sd);
}

BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt out(1);
    for (long long i = 2; i <= n; ++i) out *= i;
    return out;
}

std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

Rational rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("not a rational literal: '" + text + "'");
    }
}

}  // namespace hybrid
