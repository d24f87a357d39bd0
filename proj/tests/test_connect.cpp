#include <doctest.h>

#include <random>
#include <vector>

#include "hybrid/connect.hpp"

#include "oracles.hpp"

using namespace hybrid;

namespace {

PersistantSequence falling_basis() {
    return PersistantSequence::from_rational([](long long i) { return Rational(i - 1); });
}

MonicRationalFn poly_with_roots(std::initializer_list<long long> roots) {
    MonicRationalFn f;
    for (long long r : roots) f.roots.add(LaurentPoly::constant(Rational(r)), 1);
    return f;
}

Rational eval_expansion(const std::vector<std::pair<long long, LaurentPoly>>& coeffs,
                        const PersistantSequence& seq, const Rational& x) {
    Rational total;
    for (const auto& [index, c] : coeffs) {
        Rational q = persistant_q(seq, index).evaluate(x);
        total += c.constant_value() * q;
    }
    return total;
}

}  // namespace

TEST_CASE("persistant basis polynomials and their reciprocals") {
    PersistantSequence seq = falling_basis();
    MonicRationalFn q3 = persistant_q(seq, 3);
    CHECK(q3.degree() == 3);
    CHECK(q3.is_polynomial());
    // x(x-1)(x-2)
    CHECK(q3.evaluate(Rational(4)) == 24);
    CHECK(q3.evaluate(Rational(1)) == 0);

    MonicRationalFn qm2 = persistant_q(seq, -2);
    CHECK(qm2.degree() == -2);
    CHECK_FALSE(qm2.is_polynomial());
    // 1/((x+1)(x+2))
    CHECK(qm2.evaluate(Rational(1)) == Rational(1, 6));
    CHECK(qm2.roots.multiplicity(LaurentPoly::constant(Rational(-1))) == -1);
    CHECK(qm2.roots.multiplicity(LaurentPoly::constant(Rational(-2))) == -1);
}

TEST_CASE("polynomial expansions over a persistant basis are exact") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long long> root(-4, 4), deg(0, 5), coeff(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        MonicRationalFn f;
        long long n = deg(rng);
        for (long long i = 0; i < n; ++i)
            f.roots.add(LaurentPoly::constant(Rational(root(rng))), 1);

        long long u = coeff(rng), v = coeff(rng);
        PersistantSequence seq = PersistantSequence::from_rational(
            [u, v](long long i) { return Rational(u * i + v); });

        auto coeffs = expand(f, seq, n);
        REQUIRE(!coeffs.empty());
        CHECK(coeffs.front().second == LaurentPoly::constant(1));
        std::vector<Rational> samples = {Rational(7), Rational(-9), Rational(13, 2)};
        CHECK(verify_expansion(f, seq, coeffs, samples));
        for (const Rational& x : samples)
            CHECK(eval_expansion(coeffs, seq, x) == f.evaluate(x));
    }
}

TEST_CASE("the coefficient of q_j ignores basis roots beyond b_{j+1}") {
    MonicRationalFn f = poly_with_roots({2, -1, 3, 0, 5});
    long long n = f.degree();
    auto base = [](long long i) { return Rational(3 * i - 2); };
    PersistantSequence seq = PersistantSequence::from_rational(base);
    auto coeffs = expand(f, seq, n);

    for (long long j = 0; j <= n; ++j) {
        // perturb every root with index >= j + 2
        PersistantSequence bumped = PersistantSequence::from_rational(
            [base, j](long long i) { return i >= j + 2 ? base(i) + 17 : base(i); });
        auto other = expand(f, bumped, n);
        for (size_t t = 0; t < coeffs.size(); ++t) {
            if (coeffs[t].first != j) continue;
            CHECK(other[t].first == j);
            CHECK(other[t].second == coeffs[t].second);
        }
    }
}

TEST_CASE("expanding 1/x over the falling basis gives factorials") {
    MonicRationalFn f;
    f.roots.add(LaurentPoly::constant(Rational(0)), -1);
    PersistantSequence seq = falling_basis();
    auto coeffs = expand(f, seq, 7);
    REQUIRE(coeffs.size() == 8);
    Rational factorial(1);
    for (long long k = 0; k <= 7; ++k) {
        CHECK(coeffs[k].first == -1 - k);
        CHECK(coeffs[k].second == LaurentPoly::constant(factorial));
        factorial *= k + 1;
    }

    // the truncation residual at x = 1 is 1/(K+2), shrinking with K
    Rational previous;
    bool have_previous = false;
    for (long long K = 5; K <= 20; ++K) {
        Rational approx = eval_expansion(expand(f, seq, K), seq, Rational(1));
        Rational residual = Rational(1) - approx;
        CHECK(residual == Rational(1, K + 2));
        if (have_previous) CHECK(residual < previous);
        previous = residual;
        have_previous = true;
    }
    CHECK(verify_expansion(f, seq, coeffs, {Rational(1), Rational(5, 2)}));
}

TEST_CASE("expanding 1/x over the geometric-style basis b_i = -1") {
    MonicRationalFn f;
    f.roots.add(LaurentPoly::constant(Rational(0)), -1);
    PersistantSequence seq =
        PersistantSequence::from_rational([](long long) { return Rational(-1); });
    auto coeffs = expand(f, seq, 6);
    for (const auto& [index, c] : coeffs) CHECK(c == LaurentPoly::constant(1));
    // 1/x = sum of 1/(x+1)^k: partial sums telescope at x = 1
    CHECK(eval_expansion(coeffs, seq, Rational(1)) == Rational(1) - Rational(1, 128));
}

TEST_CASE("connection-constant inversion round-trips") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<long long> num(-6, 6);
    auto a = [](long long i) { return Rational(i); };
    auto b = [](long long i) { return Rational(2 - i); };
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> c;
        size_t len = 1 + static_cast<size_t>(trial % 6);
        for (size_t i = 0; i < len; ++i) c.push_back(Rational(num(rng), 1 + trial % 3));
        std::vector<Rational> d = invert_connection(c, a, b);
        CHECK(invert_connection(d, b, a) == c);
    }
}
