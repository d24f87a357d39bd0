#include "hybrid/symfunc.hpp"

#include <map>
#include <tuple>

namespace hybrid {

std::vector<LaurentPoly> comp_series(const VariableSet& V, long long N) {
    TruncatedSeries num = TruncatedSeries::one(N);
    TruncatedSeries den = TruncatedSeries::one(N);
    for (const auto& [x, m] : V.entries()) {
        TruncatedSeries factor = TruncatedSeries::linear_factor(N, x);
        for (long long i = 0; i < std::abs(m); ++i) {
            if (m > 0)
                num = num * factor;
            else
                den = den * factor;
        }
    }
    TruncatedSeries result = num * den.inverse();
    std::vector<LaurentPoly> out;
    out.reserve(static_cast<size_t>(N) + 1);
    for (long long k = 0; k <= N; ++k) out.push_back(result[k]);
    return out;
}

LaurentPoly comp(const VariableSet& V, long long n) {
    if (n < 0) return LaurentPoly();
    return comp_series(V, n)[static_cast<size_t>(n)];
}

LaurentPoly elementary(const std::vector<LaurentPoly>& vars, long long n) {
    VariableSet V;
    for (const auto& v : vars) V.add(-v, 1);
    return comp(V, n);
}

LaurentPoly complete(const std::vector<LaurentPoly>& vars, long long n) {
    VariableSet V;
    for (const auto& v : vars) V.add(v, -1);
    return comp(V, n);
}

VariableSet star(const VariableSet& V) {
    VariableSet out;
    for (const auto& [x, m] : V.entries()) out.add(-x, -m);
    return out;
}

namespace {

using MemoKey = std::tuple<size_t, size_t, long long>;

LaurentPoly comp_rec(const std::vector<LaurentPoly>& A, const std::vector<LaurentPoly>& B,
                     size_t m, size_t k, long long n,
                     std::map<MemoKey, LaurentPoly>& memo) {
    if (n < 0) return LaurentPoly();
    if (n == 0) return LaurentPoly::constant(1);
    if (m == 0 || k == 0) {
        VariableSet V;
        for (size_t i = 0; i < m; ++i) V.add(A[i], 1);
        for (size_t i = 0; i < k; ++i) V.add(B[i], -1);
        return comp(V, n);
    }
    MemoKey key{m, k, n};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly value = comp_rec(A, B, m - 1, k - 1, n, memo) +
                        (B[k - 1] - A[m - 1]) * comp_rec(A, B, m - 1, k, n - 1, memo);
    memo.emplace(key, value);
    return value;
}

}  // namespace

LaurentPoly comp_recursion(const std::vector<LaurentPoly>& A,
                           const std::vector<LaurentPoly>& B, long long n) {
    std::map<MemoKey, LaurentPoly> memo;
    return comp_rec(A, B, A.size(), B.size(), n, memo);
}

LaurentPoly comp_recursion(const std::function<LaurentPoly(long long)>& a, long long m,
                           const std::function<LaurentPoly(long long)>& b, long long k,
                           long long n) {
    if (m >= 0 && k >= 0) {
        std::vector<LaurentPoly> A, B;
        for (long long i = 1; i <= m; ++i) A.push_back(a(i));
        for (long long i = 1; i <= k; ++i) B.push_back(b(i));
        return comp_recursion(A, B, n);
    }
    // Improper limits: the argument is the difference of two ellipsis sets.
    return comp(ellipsis<LaurentPoly>(a, 1, m) - ellipsis<LaurentPoly>(b, 1, k), n);
}

LaurentPoly comp_incseq(const std::vector<LaurentPoly>& A,
                        const std::vector<LaurentPoly>& B, long long n) {
    if (n < 0) return LaurentPoly();
    if (n == 0) return LaurentPoly::constant(1);
    long long cutoff = static_cast<long long>(A.size() + B.size()) + n;
    auto a_at = [&](long long i) {
        return (i >= 1 && i <= static_cast<long long>(A.size()))
                   ? A[static_cast<size_t>(i - 1)]
                   : LaurentPoly();
    };
    auto b_at = [&](long long i) {
        return (i >= 1 && i <= static_cast<long long>(B.size()))
                   ? B[static_cast<size_t>(i - 1)]
                   : LaurentPoly();
    };
    LaurentPoly total;
    std::vector<long long> alpha(static_cast<size_t>(n));
    std::function<void(long long, long long, LaurentPoly)> rec =
        [&](long long pos, long long from, LaurentPoly product) {
            if (product.is_zero()) return;
            if (pos == n) {
                total += product;
                return;
            }
            for (long long v = from; v <= cutoff; ++v) {
                LaurentPoly factor = b_at(v + 1 - (pos + 1)) - a_at(v);
                rec(pos + 1, v + 1, product * factor);
            }
        };
    rec(0, 1, LaurentPoly::constant(1));
    return total;
}

}  // namespace hybrid
