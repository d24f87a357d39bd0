#pragma once

#include <vector>

#include "hybrid/laurent.hpp"

namespace hybrid {

// Power series in a formal variable t, truncated at a caller-chosen order.
// Coefficients are Laurent polynomials in the remaining variables.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long long order)
        : coeffs_(static_cast<size_t>(order) + 1) {}
    TruncatedSeries(long long order, std::vector<LaurentPoly> coeffs)
        : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<size_t>(order) + 1);
    }

    static TruncatedSeries one(long long order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = LaurentPoly::constant(1);
        return s;
    }
    // 1 - x*t, the elementary factor of the comp generating function.
    static TruncatedSeries linear_factor(long long order, const LaurentPoly& x);

    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](long long k) const { return coeffs_[static_cast<size_t>(k)]; }
    LaurentPoly& operator[](long long k) { return coeffs_[static_cast<size_t>(k)]; }

    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    // Multiplicative inverse; the t^0 coefficient must be a nonzero constant.
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<LaurentPoly> coeffs_;
};

}  // namespace hybrid
