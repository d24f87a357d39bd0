#include "hybrid/series.hpp"

namespace hybrid {

TruncatedSeries TruncatedSeries::linear_factor(long long order, const LaurentPoly& x) {
    TruncatedSeries s = one(order);
    if (order >= 1) s[1] = -x;
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    long long n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (long long i = 0; i <= n; ++i) {
        for (long long j = 0; i + j <= n; ++j) {
            if ((*this)[i].is_zero() || o[j].is_zero()) continue;
            out[i + j] += (*this)[i] * o[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    long long n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (long long i = 0; i <= n; ++i) out[i] = (*this)[i] + o[i];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const LaurentPoly& c0 = (*this)[0];
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("series inverse: t^0 coefficient must be a nonzero constant");
    Rational inv0 = Rational(rat_den(c0.constant_value()), rat_num(c0.constant_value()));
    TruncatedSeries out(order());
    out[0] = LaurentPoly::constant(inv0);
    for (long long n = 1; n <= order(); ++n) {
        LaurentPoly acc;
        for (long long j = 1; j <= n; ++j) acc += (*this)[j] * out[n - j];
        out[n] = (-acc).scaled(inv0);
    }
    return out;
}

}  // namespace hybrid
