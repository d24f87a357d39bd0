#pragma once

#include <vector>

#include "hybrid/hybrid_set.hpp"
#include "hybrid/series.hpp"

namespace hybrid {

// A hybrid set of ring values (polynomials, including bare symbols) acting
// as the variable set of the complementary symmetric function.
using VariableSet = HybridSet<LaurentPoly>;

// [comp_0(V) .. comp_N(V)], the coefficients of prod_{x in V} (1 - x t)
// truncated at order N. comp_0 is always 1.
std::vector<LaurentPoly> comp_series(const VariableSet& V, long long N);

// comp_n(V), via the generating function.
LaurentPoly comp(const VariableSet& V, long long n);

// Elementary and complete symmetric functions of the listed values;
// e_n(a,b,..) = comp_n(-a,-b,..|) and h_n(a,b,..) = comp_n(|a,b,..).
LaurentPoly elementary(const std::vector<LaurentPoly>& vars, long long n);
LaurentPoly complete(const std::vector<LaurentPoly>& vars, long long n);

// The * involution: negates each variable and inverts its multiplicity,
// exchanging the e and h specializations.
VariableSet star(const VariableSet& V);

// comp_n(a_1..a_m | b_1..b_k) by the two-term recursion
//   comp_n(..m,k..) = comp_n(..m-1,k-1..) + (b_k - a_m) comp_{n-1}(..m-1,k..),
// memoized on (m, k, n) prefixes; empty-variable cases fall back to the
// generating function.
LaurentPoly comp_recursion(const std::vector<LaurentPoly>& A,
                           const std::vector<LaurentPoly>& B, long long n);

// Same, with m or k possibly negative: the argument is then the hybrid set
// difference {a_1..a_m} - {b_1..b_k} of two ellipsis intervals.
LaurentPoly comp_recursion(const std::function<LaurentPoly(long long)>& a, long long m,
                           const std::function<LaurentPoly(long long)>& b, long long k,
                           long long n);

// comp_n as the sum over strictly increasing index sequences
// (alpha_1 < .. < alpha_n) of prod_i (b_{alpha_i+1-i} - a_{alpha_i}), with
// out-of-range entries read as zero.
LaurentPoly comp_incseq(const std::vector<LaurentPoly>& A,
                        const std::vector<LaurentPoly>& B, long long n);

}  // namespace hybrid
