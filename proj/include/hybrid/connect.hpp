#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hybrid/symfunc.hpp"

namespace hybrid {

// A monic rational function represented by its hybrid set of roots; poles
// carry negative multiplicity. f(x) = prod_{lambda in roots} (x - lambda).
struct MonicRationalFn {
    HybridSet<LaurentPoly> roots;

    long long degree() const { return roots.cardinality(); }
    bool is_polynomial() const;
    // Exact evaluation at a rational point; all roots must be constants and
    // the point must avoid the poles.
    Rational evaluate(const Rational& x) const;
};

// The bi-infinite root sequence (b_n) of a sequence of rational functions
// with persistant roots: q_n(x) = prod_{i=1}^{n} (x - b_i) for every
// integer n, poles for negative n.
struct PersistantSequence {
    std::function<LaurentPoly(long long)> b;

    static PersistantSequence from_rational(std::function<Rational(long long)> f) {
        return {[f = std::move(f)](long long i) { return LaurentPoly::constant(f(i)); }};
    }
};

// q_n(x) as a monic rational function: roots = {b_1..b_n}.
MonicRationalFn persistant_q(const PersistantSequence& seq, long long n);

// Expansion coefficient pairs (basis index n-k, c_k) for k = 0..K, where
// c_k = comp_k(Roots(f) - {b_1..b_{n-k+1}}). c_0 is always 1; for a
// polynomial f with K >= degree the expansion is exact and finite.
std::vector<std::pair<long long, LaurentPoly>> expand(const MonicRationalFn& f,
                                                      const PersistantSequence& seq,
                                                      long long K);

// Checks an expansion by exact rational evaluation at the sample points:
// exact equality for polynomial f, monotone shrinking of the truncation
// residual over K, K+1, K+2 otherwise. Samples must avoid all poles.
bool verify_expansion(const MonicRationalFn& f, const PersistantSequence& seq,
                      const std::vector<std::pair<long long, LaurentPoly>>& coeffs,
                      const std::vector<Rational>& samples);

// Connection-constant inversion: given c_n expanded over basis b in terms
// of basis a, returns d with d_n = sum_k comp_k({b_1..b_n} -
// {a_1..a_{n-k+1}}) c_{n-k}. Applying the transform twice with a and b
// exchanged returns the input.
std::vector<Rational> invert_connection(const std::vector<Rational>& c,
                                        const std::function<Rational(long long)>& a,
                                        const std::function<Rational(long long)>& b);

}  // namespace hybrid
