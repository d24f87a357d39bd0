#include <doctest.h>

#include <random>
#include <string>

#include "hybrid/hybrid_set.hpp"
#include "hybrid/numbers.hpp"

using namespace hybrid;

namespace {

using Set = HybridSet<std::string>;

Set make(std::initializer_list<std::pair<const char*, long long>> items) {
    Set out;
    for (const auto& [x, m] : items) out.add(x, m);
    return out;
}

// Closed-form membership test for the removal-sequence subset order,
// independent of the breadth-first search: either g - f can be removed
// (route A) or f itself can be removed (route B).
bool subset_oracle(const Set& f, const Set& g) {
    Set r = g - f;
    bool route_a = true;
    for (const auto& [x, m] : r.entries()) {
        if (m < 0) route_a = false;
    }
    if (route_a) {
        for (const auto& [x, gm] : g.entries())
            if (gm >= 0 && r.multiplicity(x) > gm) route_a = false;
        // elements of f absent from g would need removals from nothing
        for (const auto& [x, fm] : f.entries())
            if (g.multiplicity(x) == 0 && r.multiplicity(x) != 0) route_a = false;
    }
    if (route_a) return true;

    bool route_b = true;
    for (const auto& [x, fm] : f.entries()) {
        if (fm < 0) route_b = false;
        long long gm = g.multiplicity(x);
        if (gm == 0) route_b = false;
        if (gm > 0 && fm > gm) route_b = false;
    }
    return route_b;
}

}  // namespace

TEST_CASE("multiplicities prune to zero and cardinality is additive") {
    Set f = make({{"a", 2}, {"b", -1}});
    f.add("a", -2);
    CHECK(f.multiplicity("a") == 0);
    CHECK(f.support_size() == 1);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> mult(-3, 3);
    const char* atoms[] = {"a", "b", "c", "d"};
    for (int trial = 0; trial < 200; ++trial) {
        Set g, h;
        for (const char* x : atoms) {
            g.add(x, mult(rng));
            h.add(x, mult(rng));
        }
        CHECK((g + h).cardinality() == g.cardinality() + h.cardinality());
        CHECK((g - h).cardinality() == g.cardinality() - h.cardinality());
        Set joined = g + h;
        for (const auto& [x, m] : joined.entries()) CHECK(m != 0);
    }
}

TEST_CASE("classification of new sets") {
    CHECK(classify(make({})) == NewSetKind::Both);
    CHECK(classify(make({{"a", 1}, {"b", 1}})) == NewSetKind::Positive);
    CHECK(classify(make({{"a", -1}})) == NewSetKind::Negative);
    CHECK(classify(make({{"a", 2}})) == NewSetKind::Neither);
    CHECK(classify(make({{"a", 1}, {"b", -1}})) == NewSetKind::Neither);
}

TEST_CASE("ellipsis intervals: proper, empty, improper") {
    auto id = [](long long n) { return n; };
    CHECK(ellipsis<long long>(id, 1, 3).cardinality() == 3);
    CHECK(ellipsis<long long>(id, 1, 0).empty());
    Set improper;  // {a_3..a_1} = -{a_2}
    auto interval = ellipsis<long long>(id, 3, 1);
    CHECK(interval.cardinality() == -1);
    CHECK(interval.multiplicity(2) == -1);

    // collisions accumulate: constant sequence
    auto constant = ellipsis<long long>([](long long) { return 7; }, 1, 4);
    CHECK(constant.multiplicity(7) == 4);
}

TEST_CASE("ellipsis recursion and reciprocity") {
    auto a = [](long long n) { return 10 * n; };
    for (long long n = -6; n <= 6; ++n) {
        auto lhs = ellipsis<long long>(a, 1, n);
        auto rhs = ellipsis<long long>(a, 1, n - 1);
        rhs.add(a(n), 1);
        CHECK(lhs == rhs);

        auto b = [&](long long i) { return a(n + i); };
        CHECK(ellipsis<long long>(a, 1, n) == -ellipsis<long long>(b, 1, -n));
    }
}

TEST_CASE("sum and product over intervals: shift invariance") {
    auto A = [](long long n) { return Rational(n * n + 3 * n + 1); };
    for (long long i = -5; i <= 5; ++i)
        for (long long j = -5; j <= 5; ++j)
            for (long long s : {-5LL, -2LL, 1LL, 4LL}) {
                auto shifted = [&](long long n) { return A(n - s); };
                CHECK(sum_limits<Rational>(A, i, j) ==
                      sum_limits<Rational>(shifted, i + s, j + s));
            }
    // product over the reversed (improper) interval inverts
    auto B = [](long long n) { return Rational(n + 10) / 3; };
    CHECK(prod_limits<Rational>(B, 1, 3) * prod_limits<Rational>(B, 4, 0) == 1);
    CHECK(prod_limits<Rational>(B, 4, 2) * B(3) == 1);
}

TEST_CASE("polynomial_sum telescopes and vanishes at zero") {
    LaurentPoly x = LaurentPoly::variable("x");
    LaurentPoly p = x * x + LaurentPoly::constant(Rational(1, 2)) * x;
    LaurentPoly q = polynomial_sum(p);
    // q(n) - q(n-1) = p(n) as polynomials: compare at many points
    for (long long n = -8; n <= 8; ++n) {
        auto eval = [&](const LaurentPoly& poly, long long at) {
            return poly.specialize({{"x", Rational(at)}}).constant_value();
        };
        CHECK(eval(q, n) - eval(q, n - 1) == eval(p, n));
    }
    CHECK(q.specialize({{"x", Rational(0)}}).constant_value() == 0);

    // sum of squares has the familiar closed form
    LaurentPoly sq = polynomial_sum(x * x);
    for (long long n = -6; n <= 6; ++n) {
        Rational expected = Rational(n) * (n + 1) * (2 * n + 1) / 6;
        CHECK(sq.specialize({{"x", Rational(n)}}).constant_value() == expected);
    }
}

TEST_CASE("subset walkthrough examples") {
    Set g = make({{"a", 1}, {"b", 1}, {"c", 2}, {"d", -1}, {"e", -1}});
    CHECK(is_subset(make({{"b", 1}, {"d", 1}, {"c", 1}}), g));
    CHECK(is_subset(make({{"a", 1}, {"c", 1}, {"d", -2}, {"e", -1}}), g));
    CHECK(is_subset(g, g));
    CHECK_FALSE(is_subset(make({{"z", 1}}), g));
}

TEST_CASE("subset order is a partial order (exhaustive small universe)") {
    // all hybrid sets over {a,b,c} with multiplicities in [-2,2]
    std::vector<Set> all;
    for (long long ma = -2; ma <= 2; ++ma)
        for (long long mb = -2; mb <= 2; ++mb)
            for (long long mc = -2; mc <= 2; ++mc)
                all.push_back(make({{"a", ma}, {"b", mb}, {"c", mc}}));

    // the search agrees with the closed form on every pair
    for (const Set& f : all)
        for (const Set& g : all) {
            SubsetResult r = is_subset_search(f, g);
            REQUIRE(r != SubsetResult::UndecidedAtBound);
            CHECK((r == SubsetResult::Yes) == subset_oracle(f, g));
        }

    for (const Set& f : all) CHECK(subset_oracle(f, f));
    for (const Set& f : all)
        for (const Set& g : all)
            if (subset_oracle(f, g) && subset_oracle(g, f)) CHECK(f == g);
    for (const Set& f : all)
        for (const Set& g : all) {
            if (!subset_oracle(f, g)) continue;
            for (const Set& h : all)
                if (subset_oracle(g, h)) CHECK(subset_oracle(f, h));
        }
}

TEST_CASE("the subset order is not a lattice") {
    Set f = make({{"a", -1}, {"b", -1}});
    Set g = make({{"a", 1}, {"b", -1}});
    // the listed lower bounds really are lower bounds
    for (const Set& lb :
         {make({{"a", 1}}), make({{"a", 1}, {"b", 1}}), make({{"a", 1}, {"b", 2}})}) {
        CHECK(is_subset(lb, f));
        CHECK(is_subset(lb, g));
    }
    // f and g have no upper bound at all among small candidates
    for (long long ma = -3; ma <= 3; ++ma)
        for (long long mb = -3; mb <= 3; ++mb) {
            Set h = make({{"a", ma}, {"b", mb}});
            CHECK_FALSE((subset_oracle(f, h) && subset_oracle(g, h)));
        }
}

TEST_CASE("enumerate_subsets on the section examples") {
    Set neg = make({{"a", -1}, {"b", -1}, {"c", -1}});
    auto two = enumerate_subsets(neg, 2);
    REQUIRE(two.size() == 6);
    std::vector<Set> expected = {
        make({{"a", 2}}),           make({{"b", 2}}),
        make({{"c", 2}}),           make({{"a", 1}, {"b", 1}}),
        make({{"b", 1}, {"c", 1}}), make({{"a", 1}, {"c", 1}})};
    for (const Set& e : expected)
        CHECK(std::find(two.begin(), two.end(), e) != two.end());

    CHECK(enumerate_subsets(make({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}), 6).empty());

    auto minus5 = enumerate_subsets(neg, -5);
    REQUIRE(minus5.size() == 6);
    CHECK(std::find(minus5.begin(), minus5.end(),
                    make({{"a", -3}, {"b", -1}, {"c", -1}})) != minus5.end());
    for (const Set& s : minus5) CHECK(s.cardinality() == -5);
}

TEST_CASE("enumerate_subsets counts match the binomial coefficients") {
    const char* atoms[] = {"a", "b", "c", "d", "e"};
    for (long long size = 0; size <= 5; ++size) {
        for (int sign : {1, -1}) {
            Set f;
            for (long long i = 0; i < size; ++i) f.add(atoms[i], sign);
            long long n = f.cardinality();
            for (long long k = -7; k <= 7; ++k) {
                auto subs = enumerate_subsets(f, k);
                BigInt expected = binomial(n, k);
                if (expected < 0) expected = -expected;
                CHECK(BigInt(subs.size()) == expected);
                for (const Set& s : subs) CHECK(s.cardinality() == k);
                // distinctness
                for (size_t i = 0; i + 1 < subs.size(); ++i)
                    CHECK(!(subs[i] == subs[i + 1]));
            }
        }
    }
}

TEST_CASE("enumerate_subsets on multisets gives classical sub-multisets") {
    Set m = make({{"a", 2}, {"b", 1}});
    auto subs = enumerate_subsets(m, 2);
    REQUIRE(subs.size() == 2);  // {a,a}, {a,b}
    CHECK(std::find(subs.begin(), subs.end(), make({{"a", 2}})) != subs.end());
    CHECK(std::find(subs.begin(), subs.end(), make({{"a", 1}, {"b", 1}})) != subs.end());
    CHECK_THROWS_AS(enumerate_subsets(make({{"a", 2}, {"b", -1}}), 1),
                    std::domain_error);
}
