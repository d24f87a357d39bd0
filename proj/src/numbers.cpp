#include "hybrid/numbers.hpp"

namespace hybrid {

Region region_of(long long n, long long k) {
    if (n >= k && k >= 0) return Region::R1;
    if (k >= 0 && n < 0) return Region::R2;
    if (n < 0 && n >= k) return Region::R3;
    if (k > n && n >= 0) return Region::R4;
    if (k < 0 && k > n) return Region::R5;
    return Region::R6;  // n >= 0 > k
}

namespace {

BigInt classical_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt sign(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

BigInt binomial(long long n, long long k) {
    switch (region_of(n, k)) {
        case Region::R1:
            return classical_binomial(n, k);
        case Region::R2:
            return sign(k) * classical_binomial(-n + k - 1, k);
        case Region::R3:
            return sign(n + k) * classical_binomial(-k - 1, n - k);
        default:
            return 0;
    }
}

std::vector<BigInt> binomial_series(long long n, long long J) {
    if (J < 0) throw std::domain_error("binomial_series: order must be nonnegative");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(J) + 1);
    for (long long j = 0; j <= J; ++j) out.push_back(binomial(n, n - j));
    return out;
}

namespace {

// The variable set {a_1..a_n} with a_i = -q^{i-1}.
VariableSet gaussian_roots(long long n) {
    return ellipsis<LaurentPoly>(
        [](long long i) {
            return -LaurentPoly::monomial(Rational(1), {{"q", 2 * (i - 1)}});
        },
        1, n);
}

VariableSet stirling1_set(long long n) {
    // {0..n-1} over the identity sequence.
    return ellipsis<LaurentPoly>(
        [](long long i) { return LaurentPoly::constant(i); }, 0, n - 1);
}

VariableSet stirling2_set(long long k) {
    return -ellipsis<LaurentPoly>(
        [](long long i) { return LaurentPoly::constant(i); }, 0, k);
}

VariableSet stirling1_pq_set(long long n) {
    return ellipsis<LaurentPoly>([](long long i) { return pq_number(i); }, 0, n - 1);
}

VariableSet stirling2_pq_set(long long k) {
    return -ellipsis<LaurentPoly>([](long long i) { return pq_number(i); }, 0, k);
}

void require_stirling_region(long long n, long long k, const char* what) {
    bool ok = (n >= 0 && k >= 0) || (n < 0 && k < 0);
    if (!ok)
        throw UnsupportedRegionError(std::string(what) + ": (n,k)=(" + std::to_string(n) +
                                     "," + std::to_string(k) +
                                     ") is outside regions 1 and 3");
}

BigInt constant_integer(const LaurentPoly& p, const char* what) {
    Rational v = p.constant_value();
    if (rat_den(v) != 1) throw std::logic_error(std::string(what) + ": non-integer value");
    return rat_num(v);
}

}  // namespace

LaurentPoly gaussian(long long n, long long k) {
    if (k >= 0 && n < 0)
        throw UnsupportedRegionError(
            "gaussian: k >= 0 > n is not covered by the comp expansion");
    return comp(gaussian_roots(n), n - k);
}

BigInt stirling1(long long n, long long k) {
    require_stirling_region(n, k, "stirling1");
    return constant_integer(comp(stirling1_set(n), n - k), "stirling1");
}

BigInt stirling2(long long n, long long k) {
    require_stirling_region(n, k, "stirling2");
    return constant_integer(comp(stirling2_set(k), n - k), "stirling2");
}

Rational stirling1_region2(long long n, long long k) {
    if (n >= 0 || k < 0)
        throw UnsupportedRegionError("stirling1_region2: requires n < 0 <= k");
    long long m = -n;
    Rational sum(0);
    for (long long j = 1; j <= m; ++j) {
        Rational term = Rational(classical_binomial(m, j)) * rat_pow(Rational(j), -k);
        sum += (j % 2 == 0) ? term : -term;
    }
    Rational prefix = Rational(sign(k + 1), factorial(m));
    return prefix * sum;
}

LaurentPoly stirling1_pq(long long n, long long k) {
    require_stirling_region(n, k, "stirling1_pq");
    return comp(stirling1_pq_set(n), n - k);
}

LaurentPoly stirling2_pq(long long n, long long k) {
    require_stirling_region(n, k, "stirling2_pq");
    return comp(stirling2_pq_set(k), n - k);
}

LaurentPoly stirling1_q(long long n, long long k) {
    return stirling1_pq(n, k).specialize({{"p", Rational(1)}});
}

LaurentPoly stirling2_q(long long n, long long k) {
    return stirling2_pq(n, k).specialize({{"p", Rational(1)}});
}

NumberFamily family_from_string(const std::string& name) {
    if (name == "binomial") return NumberFamily::Binomial;
    if (name == "gaussian") return NumberFamily::Gaussian;
    if (name == "stirling1") return NumberFamily::Stirling1;
    if (name == "stirling2") return NumberFamily::Stirling2;
    if (name == "stirling1-region2") return NumberFamily::Stirling1Region2;
    if (name == "stirling1-pq") return NumberFamily::Stirling1PQ;
    if (name == "stirling2-pq") return NumberFamily::Stirling2PQ;
    if (name == "stirling1-q") return NumberFamily::Stirling1Q;
    if (name == "stirling2-q") return NumberFamily::Stirling2Q;
    throw std::domain_error("unknown number family: '" + name + "'");
}

std::string table_cell(NumberFamily family, long long n, long long k) {
    switch (family) {
        case NumberFamily::Binomial:
            return binomial(n, k).str();
        case NumberFamily::Gaussian:
            return gaussian(n, k).to_string();
        case NumberFamily::Stirling1:
            return stirling1(n, k).str();
        case NumberFamily::Stirling2:
            return stirling2(n, k).str();
        case NumberFamily::Stirling1Region2:
            return rat_to_string(stirling1_region2(n, k));
        case NumberFamily::Stirling1PQ:
            return stirling1_pq(n, k).to_string();
        case NumberFamily::Stirling2PQ:
            return stirling2_pq(n, k).to_string();
        case NumberFamily::Stirling1Q:
            return stirling1_q(n, k).to_string();
        case NumberFamily::Stirling2Q:
            return stirling2_q(n, k).to_string();
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<std::string>> table(NumberFamily family, long long n_lo,
                                            long long n_hi, long long k_lo,
                                            long long k_hi) {
    std::vector<std::vector<std::string>> rows;
    for (long long n = n_hi; n >= n_lo; --n) {
        std::vector<std::string> row;
        for (long long k = k_lo; k <= k_hi; ++k) row.push_back(table_cell(family, n, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hybrid
