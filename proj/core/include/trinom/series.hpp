/**
 * @file series.hpp
 * @brief Formal power series truncated at a fixed order, exact coefficients.
 *
 * A series of order N stores coefficients of t^0 .. t^(N-1). Every operation
 * respects truncation: coefficient k of a result depends only on coefficients
 * 0..k of the inputs, so results computed at a higher order and truncated
 * agree with results computed at the lower order directly.
 */
#ifndef TRINOM_SERIES_HPP
#define TRINOM_SERIES_HPP

#include <cstddef>
#include <vector>

#include "trinom/exact.hpp"

namespace trinom {

class TruncatedSeries {
public:
    /// Zero series of the given order (order >= 1).
    explicit TruncatedSeries(std::size_t order);

    /// Series from a coefficient prefix, zero padded up to `order`.
    static TruncatedSeries from_coeffs(std::vector<ExactRat> prefix, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const ExactRat& coeff(std::size_t k) const;
    void set_coeff(std::size_t k, ExactRat v);

    /// Copy truncated down to `new_order` (new_order <= order).
    TruncatedSeries truncated(std::size_t new_order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<ExactRat> c_;
};

/// Cauchy product; operands must have equal orders.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRat& s);

/// exp(a) for a series with zero constant term, via f' = a'f.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// s with s^2 * a = 1 + O(t^order) and s(0) = +1; a must have constant term 1.
TruncatedSeries series_inv_sqrt(const TruncatedSeries& a);

/// Coefficient of t^k; k must be < order.
ExactRat series_coeff(const TruncatedSeries& a, std::size_t k);

/// a / t for a series with zero constant term; the order drops by one.
TruncatedSeries series_shift_down(const TruncatedSeries& a);

}  // namespace trinom

#endif  // TRINOM_SERIES_HPP
