#pragma once

#include "hybrid/laurent.hpp"

namespace hybrid {

// The p,q-number [i] = sqrt(pq)(p^i - q^i)/(p - q) as an exact Laurent
// polynomial: 0 for i = 0, sqrt(pq) * sum_{j<i} p^j q^{i-1-j} for i > 0,
// and -[-i] * p^i q^i for i < 0. Symmetric under exchanging p and q.
LaurentPoly pq_number(long long i);

// [i] with p set to one: the q-number sqrt(q)(q^i - 1)/(q - 1).
LaurentPoly q_number(long long i);

}  // namespace hybrid
