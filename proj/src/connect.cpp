#include "hybrid/connect.hpp"

namespace hybrid {

bool MonicRationalFn::is_polynomial() const {
    for (const auto& [root, m] : roots.entries())
        if (m < 0) return false;
    return true;
}

Rational MonicRationalFn::evaluate(const Rational& x) const {
    Rational out(1);
    for (const auto& [root, m] : roots.entries()) {
        Rational factor = x - root.constant_value();
        if (factor == 0 && m < 0)
            throw std::domain_error("MonicRationalFn::evaluate: sample hits a pole");
        out *= rat_pow(factor, m);
    }
    return out;
}

MonicRationalFn persistant_q(const PersistantSequence& seq, long long n) {
    return {ellipsis<LaurentPoly>(seq.b, 1, n)};
}

std::vector<std::pair<long long, LaurentPoly>> expand(const MonicRationalFn& f,
                                                      const PersistantSequence& seq,
                                                      long long K) {
    if (K < 0) throw std::domain_error("expand: truncation order must be nonnegative");
    long long n = f.degree();
    std::vector<std::pair<long long, LaurentPoly>> out;
    out.reserve(static_cast<size_t>(K) + 1);
    for (long long k = 0; k <= K; ++k) {
        VariableSet V = f.roots - ellipsis<LaurentPoly>(seq.b, 1, n - k + 1);
        out.emplace_back(n - k, comp(V, k));
    }
    return out;
}

namespace {

Rational partial_sum(const std::vector<std::pair<long long, LaurentPoly>>& coeffs,
                     const PersistantSequence& seq, const Rational& x, size_t upto) {
    Rational acc(0);
    for (size_t k = 0; k < upto && k < coeffs.size(); ++k) {
        const auto& [index, c] = coeffs[k];
        acc += c.constant_value() * persistant_q(seq, index).evaluate(x);
    }
    return acc;
}

}  // namespace

bool verify_expansion(const MonicRationalFn& f, const PersistantSequence& seq,
                      const std::vector<std::pair<long long, LaurentPoly>>& coeffs,
                      const std::vector<Rational>& samples) {
    if (f.is_polynomial()) {
        for (const Rational& x : samples) {
            if (partial_sum(coeffs, seq, x, coeffs.size()) != f.evaluate(x)) return false;
        }
        return true;
    }
    // Truncated expansion of a genuinely rational f: check that the
    // residual shrinks as two more terms are taken.
    long long K = static_cast<long long>(coeffs.size()) - 1;
    auto extended = expand(f, seq, K + 2);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (extended[k] != coeffs[k]) return false;
    }
    for (const Rational& x : samples) {
        Rational target = f.evaluate(x);
        Rational prev(-1);
        for (long long j = 0; j <= 2; ++j) {
            Rational r = rat_abs(target - partial_sum(extended, seq, x,
                                                      static_cast<size_t>(K + 1 + j)));
            if (j > 0 && r >= prev) return false;
            prev = r;
        }
    }
    return true;
}

std::vector<Rational> invert_connection(const std::vector<Rational>& c,
                                        const std::function<Rational(long long)>& a,
                                        const std::function<Rational(long long)>& b) {
    auto lift = [](const std::function<Rational(long long)>& f) {
        return std::function<LaurentPoly(long long)>(
            [f](long long i) { return LaurentPoly::constant(f(i)); });
    };
    auto la = lift(a), lb = lift(b);
    std::vector<Rational> d(c.size());
    for (long long n = 0; n < static_cast<long long>(c.size()); ++n) {
        Rational acc(0);
        for (long long k = 0; k <= n; ++k) {
            VariableSet V =
                ellipsis<LaurentPoly>(lb, 1, n) - ellipsis<LaurentPoly>(la, 1, n - k + 1);
            acc += comp(V, k).constant_value() * c[static_cast<size_t>(n - k)];
        }
        d[static_cast<size_t>(n)] = acc;
    }
    return d;
}

}  // namespace hybrid
