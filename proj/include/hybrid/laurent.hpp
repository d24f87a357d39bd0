#pragma once

#include <map>
#include <string>
#include <vector>

#include "hybrid/rational.hpp"

namespace hybrid {

// Exponent vector of a monomial. Exponents live in (1/2)Z and are stored
// doubled, so q^(1/2) has entry {"q", 1} and q^3 has {"q", 6}. Zero entries
// are never stored.
using Exponents = std::map<std::string, long long>;

// Sparse multivariate Laurent polynomial with exact rational coefficients
// and half-integer exponents. Immutable in spirit: all operations return
// new values.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly constant(long long c) { return constant(Rational(c)); }
    // Plain variable x^1 (doubled exponent 2).
    static LaurentPoly variable(const std::string& name);
    static LaurentPoly monomial(const Rational& coeff, const Exponents& exps);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    Rational constant_value() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const;

    // exp >= 0 for general polynomials; negative exponents require a
    // monomial (throws std::domain_error otherwise).
    LaurentPoly pow(long long exp) const;
    // Multiplicative inverse; defined only for monomials.
    LaurentPoly inverse() const;

    // Substitutes rational values for the named variables. A variable with
    // an odd doubled exponent needs an exact square root of its value.
    LaurentPoly specialize(const std::map<std::string, Rational>& bindings) const;

    // Replaces every bound variable v by v^{-1}.
    LaurentPoly invert_vars(const std::vector<std::string>& names) const;

    // Rational coefficient of a given (doubled) exponent vector.
    Rational coeff(const Exponents& exps) const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Total order so polynomials can key hybrid sets canonically.
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    // Canonical text form: terms in descending lexicographic exponent order,
    // coefficients as num/den, half exponents as ^(k/2).
    std::string to_string() const;

private:
    void prune();
    std::map<Exponents, Rational> terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled(c); }

}  // namespace hybrid
