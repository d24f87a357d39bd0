#include "hybrid/hybrid_set.hpp"

namespace hybrid {

namespace {

Rational eval_univariate(const LaurentPoly& p, const std::string& var, const Rational& x) {
    return p.specialize({{var, x}}).constant_value();
}

}  // namespace

LaurentPoly polynomial_sum(const LaurentPoly& p, const std::string& var) {
    long long deg = 0;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& [name, d] : e) {
            if (name != var || d < 0 || d % 2 != 0)
                throw std::domain_error("polynomial_sum: expected a polynomial in " + var);
            deg = std::max(deg, d / 2);
        }
    }

    // Interpolate q of degree deg+1 through (n, sum_{i=1}^{n} p(i)) at
    // deg+2 integer nodes, then spot-check q(n) - q(n-1) = p(n) at extra
    // negative arguments.
    std::function<Rational(long long)> term = [&](long long i) {
        return eval_univariate(p, var, Rational(i));
    };
    std::vector<long long> nodes;
    std::vector<Rational> values;
    for (long long n = 0; n <= deg + 1; ++n) {
        nodes.push_back(n);
        values.push_back(sum_limits<Rational>(term, 1, n));
    }

    LaurentPoly q;
    LaurentPoly x = LaurentPoly::variable(var);
    for (size_t i = 0; i < nodes.size(); ++i) {
        LaurentPoly basis = LaurentPoly::constant(1);
        Rational denom(1);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            basis *= x - LaurentPoly::constant(nodes[j]);
            denom *= Rational(nodes[i] - nodes[j]);
        }
        q += basis.scaled(values[i] / denom);
    }

    for (long long n = -3; n <= -1; ++n) {
        if (eval_univariate(q, var, Rational(n)) != sum_limits<Rational>(term, 1, n))
            throw std::logic_error("polynomial_sum: interpolant failed negative-point check");
    }
    return q;
}

}  // namespace hybrid
