#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hybrid/laurent.hpp"
#include "hybrid/rational.hpp"

namespace hybrid {

// A hybrid set: a finite-support mapping from elements to nonzero integer
// multiplicities. Positive multiplicities generalize multiset membership,
// negative multiplicities are first-class citizens.
template <class T>
class HybridSet {
public:
    HybridSet() = default;

    long long multiplicity(const T& x) const {
        auto it = entries_.find(x);
        return it == entries_.end() ? 0 : it->second;
    }
    bool contains(const T& x) const { return multiplicity(x) != 0; }

    void add(const T& x, long long m = 1) {
        if (m == 0) return;
        auto [it, inserted] = entries_.emplace(x, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0) entries_.erase(it);
        }
    }

    HybridSet operator+(const HybridSet& o) const {
        HybridSet out = *this;
        for (const auto& [x, m] : o.entries_) out.add(x, m);
        return out;
    }
    HybridSet operator-(const HybridSet& o) const {
        HybridSet out = *this;
        for (const auto& [x, m] : o.entries_) out.add(x, -m);
        return out;
    }
    HybridSet operator-() const {
        HybridSet out;
        for (const auto& [x, m] : entries_) out.entries_.emplace(x, -m);
        return out;
    }

    long long cardinality() const {
        long long total = 0;
        for (const auto& [x, m] : entries_) total += m;
        return total;
    }

    bool empty() const { return entries_.empty(); }
    size_t support_size() const { return entries_.size(); }
    const std::map<T, long long>& entries() const { return entries_; }

    bool operator==(const HybridSet& o) const { return entries_ == o.entries_; }
    bool operator!=(const HybridSet& o) const { return !(*this == o); }
    bool operator<(const HybridSet& o) const { return entries_ < o.entries_; }

private:
    std::map<T, long long> entries_;
};

// Classification of a hybrid set against the classical notions: the empty
// set is both a positive and a negative set.
enum class NewSetKind { Positive, Negative, Both, Neither };

template <class T>
NewSetKind classify(const HybridSet<T>& f) {
    bool all_pos = true, all_neg = true;
    for (const auto& [x, m] : f.entries()) {
        if (m != 1) all_pos = false;
        if (m != -1) all_neg = false;
    }
    if (all_pos && all_neg) return NewSetKind::Both;
    if (all_pos) return NewSetKind::Positive;
    if (all_neg) return NewSetKind::Negative;
    return NewSetKind::Neither;
}

// The interval hybrid set {a_i..a_j}: positive for i <= j, empty for
// i == j+1, negative ("improper") for i >= j+2. Repeated values accumulate
// multiplicity.
template <class T>
HybridSet<T> ellipsis(const std::function<T(long long)>& seq, long long i, long long j) {
    HybridSet<T> out;
    if (i <= j) {
        for (long long n = i; n <= j; ++n) out.add(seq(n), 1);
    } else if (i >= j + 2) {
        for (long long n = j + 1; n <= i - 1; ++n) out.add(seq(n), -1);
    }
    return out;
}

inline HybridSet<long long> index_interval(long long i, long long j) {
    return ellipsis<long long>([](long long n) { return n; }, i, j);
}

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational one() { return Rational(1); }
    static Rational pow(const Rational& v, long long m) { return rat_pow(v, m); }
    static Rational scale(const Rational& v, long long m) { return v * Rational(m); }
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly one() { return LaurentPoly::constant(1); }
    static LaurentPoly pow(const LaurentPoly& v, long long m) { return v.pow(m); }
    static LaurentPoly scale(const LaurentPoly& v, long long m) {
        return v.scaled(Rational(m));
    }
};

// sum over x in f of f(x)*F(x).
template <class R, class T>
R sum_over(const HybridSet<T>& f, const std::function<R(const T&)>& F) {
    R acc{};
    for (const auto& [x, m] : f.entries()) acc += RingTraits<R>::scale(F(x), m);
    return acc;
}

// product over x in f of F(x)^{f(x)}; negative multiplicities require the
// factor to be invertible.
template <class R, class T>
R prod_over(const HybridSet<T>& f, const std::function<R(const T&)>& F) {
    R acc = RingTraits<R>::one();
    for (const auto& [x, m] : f.entries()) acc *= RingTraits<R>::pow(F(x), m);
    return acc;
}

// Sum of A(n) from i to j over the interval hybrid set {i..j}; shift
// invariant, improper intervals negate.
template <class R>
R sum_limits(const std::function<R(long long)>& A, long long i, long long j) {
    return sum_over<R, long long>(index_interval(i, j), A);
}

template <class R>
R prod_limits(const std::function<R(long long)>& A, long long i, long long j) {
    return prod_over<R, long long>(index_interval(i, j), A);
}

// Given a univariate polynomial p (in `var`, rational coefficients,
// nonnegative integer exponents), returns the polynomial q of degree
// deg p + 1 with q(n) = sum_limits(p, 1, n) for every integer n.
LaurentPoly polynomial_sum(const LaurentPoly& p, const std::string& var = "x");

// g minus one occurrence of x; x must be a member of g.
template <class T>
HybridSet<T> remove_element(const HybridSet<T>& g, const T& x) {
    if (!g.contains(x)) throw std::domain_error("remove_element: not a member");
    HybridSet<T> out = g;
    out.add(x, -1);
    return out;
}

enum class SubsetResult { No, Yes, UndecidedAtBound };

// f is a subset of g when some sequence of single-element removals from g
// either leaves f as the remainder or removes exactly f (as a classical
// multiset of removal events). Decided by breadth-first search over removal
// multisets, depth-bounded; states that can no longer reach either goal are
// pruned.
template <class T>
SubsetResult is_subset_search(const HybridSet<T>& f, const HybridSet<T>& g) {
    // Per-element cap on useful removals of x: enough to realize either the
    // remainder goal (remove g-f) or the removal goal (remove f itself).
    auto cap = [&](const T& x) {
        long long gm = g.multiplicity(x), fm = f.multiplicity(x);
        long long want_remainder = gm - fm;      // valid only if >= 0
        long long want_removed = std::max<long long>(fm, 0);
        return std::max(want_remainder, want_removed);
    };

    // Removals only draw on g's support, at most cap(x) each, so this depth
    // bound lets the search run to exhaustion.
    long long bound = 0;
    for (const auto& [x, m] : g.entries()) bound += std::max<long long>(cap(x), 0);

    HybridSet<T> empty_removed;
    std::set<HybridSet<T>> visited{empty_removed};
    std::deque<std::pair<HybridSet<T>, long long>> queue{{empty_removed, 0}};
    bool truncated = false;
    while (!queue.empty()) {
        auto [removed, depth] = queue.front();
        queue.pop_front();
        HybridSet<T> remainder = g - removed;
        if (remainder == f || removed == f) return SubsetResult::Yes;
        for (const auto& [x, gm] : g.entries()) {
            if (remainder.multiplicity(x) == 0) continue;
            if (removed.multiplicity(x) >= cap(x)) continue;
            HybridSet<T> next = removed;
            next.add(x, 1);
            if (!visited.insert(next).second) continue;
            if (depth >= bound) {
                truncated = true;
                continue;
            }
            queue.emplace_back(next, depth + 1);
        }
    }
    return truncated ? SubsetResult::UndecidedAtBound : SubsetResult::No;
}

template <class T>
bool is_subset(const HybridSet<T>& f, const HybridSet<T>& g) {
    SubsetResult r = is_subset_search(f, g);
    if (r == SubsetResult::UndecidedAtBound)
        throw std::runtime_error("is_subset: undecided at search bound");
    return r == SubsetResult::Yes;
}

namespace detail {

// All k-element multisets over `support`, as positive hybrid sets.
template <class T>
void multisets_of_size(const std::vector<T>& support, size_t from, long long k,
                       HybridSet<T>& acc, std::vector<HybridSet<T>>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    if (from >= support.size()) return;
    for (long long take = k; take >= 0; --take) {
        if (take > 0) {
            HybridSet<T> next = acc;
            next.add(support[from], take);
            multisets_of_size(support, from + 1, k - take, next, out);
        } else {
            multisets_of_size(support, from + 1, k, acc, out);
        }
    }
}

template <class T>
std::vector<HybridSet<T>> multisets_of_size(const std::vector<T>& support, long long k) {
    std::vector<HybridSet<T>> out;
    HybridSet<T> acc;
    multisets_of_size(support, 0, k, acc, out);
    return out;
}

}  // namespace detail

// All distinct k-element subsets of a new set f, in canonical order. For a
// positive f these are the classical subsets; for a negative f the two
// constructive families are the removable multisets (k >= 0) and the
// remainders after removing #f - k elements (k <= #f).
template <class T>
std::vector<HybridSet<T>> enumerate_subsets(const HybridSet<T>& f, long long k) {
    bool all_positive = true, all_negative = true;
    for (const auto& [x, m] : f.entries()) {
        if (m < 0) all_positive = false;
        if (m > 0) all_negative = false;
    }
    if (!all_positive && !all_negative)
        throw std::domain_error("enumerate_subsets: argument must be a new set or multiset");
    std::vector<T> support;
    for (const auto& [x, m] : f.entries()) support.push_back(x);
    long long n = f.cardinality();

    std::vector<HybridSet<T>> out;
    if (all_positive) {
        // Sub-multisets of size k; for a classical set these are the
        // k-combinations.
        if (k >= 0 && k <= n) {
            HybridSet<T> cur;
            std::function<void(size_t, long long)> rec = [&](size_t from, long long left) {
                if (left == 0) {
                    out.push_back(cur);
                    return;
                }
                if (from >= support.size()) return;
                long long avail = f.multiplicity(support[from]);
                for (long long take = 0; take <= std::min(avail, left); ++take) {
                    if (take > 0) cur.add(support[from], 1);
                    rec(from + 1, left - take);
                }
                cur.add(support[from], -std::min(avail, left));
            };
            rec(0, k);
            std::sort(out.begin(), out.end());
        }
        return out;
    }

    // Negative set; #f = -(support size).
    if (k >= 0) {
        out = detail::multisets_of_size(support, k);
    } else if (k <= n) {
        for (auto& removed : detail::multisets_of_size(support, n - k)) {
            out.push_back(f - removed);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hybrid
