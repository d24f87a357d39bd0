#pragma once

#include <string>
#include <vector>

#include "hybrid/pq.hpp"
#include "hybrid/symfunc.hpp"

namespace hybrid {

// The six sign regions of (n, k) that govern the closed forms of the
// extended binomial coefficient. They partition Z^2.
enum class Region { R1, R2, R3, R4, R5, R6 };
Region region_of(long long n, long long k);

// Thrown for number-family requests outside the regions where the family
// is defined.
struct UnsupportedRegionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Extended binomial coefficient, integer-valued on all of Z^2:
// R1 n!/(k!(n-k)!); R2 (-1)^k C(-n+k-1, k); R3 (-1)^{n+k} C(-k-1, n-k);
// zero in regions 4-6.
BigInt binomial(long long n, long long k);

// Coefficients of x^j, j = 0..J, in the formal power series (1+x)^n;
// the j-th entry equals binomial(n, n-j).
std::vector<BigInt> binomial_series(long long n, long long J);

// Gaussian coefficient C(n,k)_q = comp_{n-k}(-1,-q,..,-q^{n-1}), a Laurent
// polynomial in q. Defined in regions 1 and 3 and the zero regions 4-6;
// k >= 0 > n is not covered by the expansion and is rejected.
LaurentPoly gaussian(long long n, long long k);

// Stirling numbers via comp over ellipsis intervals:
// s(n,k) = comp_{n-k}({0..n-1}), S(n,k) = comp_{n-k}(-{0..k}).
// Defined for n,k both nonnegative (region 1) or both negative (region 3).
BigInt stirling1(long long n, long long k);
BigInt stirling2(long long n, long long k);

// Region-2 Stirling numbers of the first kind (n < 0 <= k), the rational
// values s(-m,k) = ((-1)^{k+1}/m!) sum_{j=1}^{m} C(m,j)(-1)^j j^{-k}.
Rational stirling1_region2(long long n, long long k);

// p,q-Stirling numbers: comp over ellipsis of p,q-numbers. Same regions
// as the integer Stirling numbers.
LaurentPoly stirling1_pq(long long n, long long k);
LaurentPoly stirling2_pq(long long n, long long k);

// q-Stirling numbers, obtained by specializing p = 1.
LaurentPoly stirling1_q(long long n, long long k);
LaurentPoly stirling2_q(long long n, long long k);

enum class NumberFamily {
    Binomial,
    Gaussian,
    Stirling1,
    Stirling2,
    Stirling1Region2,
    Stirling1PQ,
    Stirling2PQ,
    Stirling1Q,
    Stirling2Q,
};

NumberFamily family_from_string(const std::string& name);

// Single table cell in canonical text form; throws UnsupportedRegionError
// outside the family's domain.
std::string table_cell(NumberFamily family, long long n, long long k);

// Dense matrix of canonical renderings: rows run over n descending,
// columns over k ascending.
std::vector<std::vector<std::string>> table(NumberFamily family, long long n_lo,
                                            long long n_hi, long long k_lo,
                                            long long k_hi);

}  // namespace hybrid
