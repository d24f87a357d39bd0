#include "hybrid/pq.hpp"

namespace hybrid {

LaurentPoly pq_number(long long i) {
    if (i == 0) return LaurentPoly();
    if (i < 0) {
        LaurentPoly scale =
            LaurentPoly::monomial(Rational(1), {{"p", 2 * i}, {"q", 2 * i}});
        return -(pq_number(-i) * scale);
    }
    LaurentPoly sum;
    for (long long j = 0; j < i; ++j)
        sum += LaurentPoly::monomial(Rational(1), {{"p", 2 * j}, {"q", 2 * (i - 1 - j)}});
    return LaurentPoly::monomial(Rational(1), {{"p", 1}, {"q", 1}}) * sum;
}

LaurentPoly q_number(long long i) {
    return pq_number(i).specialize({{"p", Rational(1)}});
}

}  // namespace hybrid
