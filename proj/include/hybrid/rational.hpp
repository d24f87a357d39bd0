#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hybrid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_pow(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("rat_pow: zero to a negative power");
        return Rational(0);
    }
    Rational b = base;
    long long e = exp;
    if (e < 0) {
        b = Rational(rat_den(base), rat_num(base));
        e = -e;
    }
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// Exact square root; throws unless numerator and denominator are perfect squares.
Rational rat_sqrt(const Rational& r);

BigInt factorial(long long n);

// Renders as "num" or "num/den"; parse accepts the same forms.
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& text);

}  // namespace hybrid
