#include "hybrid/laurent.hpp"

#include <sstream>

namespace hybrid {

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
    LaurentPoly p;
    p.terms_[{{name, 2}}] = Rational(1);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, const Exponents& exps) {
    LaurentPoly p;
    if (coeff == 0) return p;
    Exponents e;
    for (const auto& [name, d] : exps)
        if (d != 0) e[name] = d;
    p.terms_[e] = coeff;
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.terms_[e] += c;
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.terms_[e] -= c;
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = ea;
            for (const auto& [name, d] : eb) {
                auto it = e.find(name);
                if (it == e.end()) {
                    e[name] = d;
                } else {
                    it->second += d;
                    if (it->second == 0) e.erase(it);
                }
            }
            out.terms_[e] += ca * cb;
        }
    }
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    out = *this;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

LaurentPoly LaurentPoly::pow(long long exp) const {
    if (exp < 0) return inverse().pow(-exp);
    LaurentPoly out = constant(1);
    LaurentPoly base = *this;
    long long e = exp;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

LaurentPoly LaurentPoly::inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("inverse: only monomials are invertible: " + to_string());
    const auto& [e, c] = *terms_.begin();
    Exponents inv;
    for (const auto& [name, d] : e) inv[name] = -d;
    return monomial(Rational(rat_den(c), rat_num(c)), inv);
}

LaurentPoly LaurentPoly::specialize(const std::map<std::string, Rational>& bindings) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponents rest;
        for (const auto& [name, d] : e) {
            auto it = bindings.find(name);
            if (it == bindings.end()) {
                rest[name] = d;
                continue;
            }
            const Rational& v = it->second;
            if (d % 2 == 0) {
                coeff *= rat_pow(v, d / 2);
            } else {
                coeff *= rat_pow(rat_sqrt(v), d);
            }
        }
        out += monomial(coeff, rest);
    }
    return out;
}

LaurentPoly LaurentPoly::invert_vars(const std::vector<std::string>& names) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents flipped = e;
        for (const auto& name : names) {
            auto it = flipped.find(name);
            if (it != flipped.end()) it->second = -it->second;
        }
        out += monomial(c, flipped);
    }
    return out;
}

Rational LaurentPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

std::string monomial_to_string(const Exponents& e) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, d] : e) {
        if (!first) out << "*";
        first = false;
        out << name;
        if (d == 2) continue;
        if (d % 2 == 0)
            out << "^" << d / 2;
        else
            out << "^(" << d << "/2)";
    }
    return out.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            first = false;
        } else if (a < 0) {
            out << "-";
            a = -a;
        } else {
            out << "+";
        }
        if (e.empty()) {
            out << rat_to_string(a);
        } else if (a == 1) {
            out << monomial_to_string(e);
        } else if (a == -1) {
            out << "-" << monomial_to_string(e);
        } else {
            out << rat_to_string(a) << "*" << monomial_to_string(e);
        }
    }
    return out.str();
}

}  // namespace hybrid
