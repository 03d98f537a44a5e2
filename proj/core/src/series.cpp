#include "trinom/series.hpp"

#include <stdexcept>

namespace trinom {

TruncatedSeries::TruncatedSeries(std::size_t order) {
    if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    c_.assign(order, ExactRat(0));
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<ExactRat> prefix, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k < prefix.size() && k < order; ++k) s.c_[k] = std::move(prefix[k]);
    return s;
}

const ExactRat& TruncatedSeries::coeff(std::size_t k) const {
    if (k >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient index >= order");
    return c_[k];
}

void TruncatedSeries::set_coeff(std::size_t k, ExactRat v) {
    if (k >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient index >= order");
    c_[k] = std::move(v);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order == 0 || new_order > c_.size())
        throw std::invalid_argument("TruncatedSeries: bad truncation order");
    TruncatedSeries s(new_order);
    for (std::size_t k = 0; k < new_order; ++k) s.c_[k] = c_[k];
    return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series: mismatched truncation orders");
}

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const ExactRat& s) {
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) r.set_coeff(k, a.coeff(k) * s);
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    const std::size_t n = a.order();
    TruncatedSeries f(n);
    f.set_coeff(0, ExactRat(1));
    // f' = a'f gives (k+1) f_{k+1} = sum_{i} (i+1) a_{i+1} f_{k-i}
    for (std::size_t k = 0; k + 1 < n; ++k) {
        ExactRat acc(0);
        for (std::size_t i = 0; i <= k; ++i) {
            if (a.coeff(i + 1).is_zero()) continue;
            acc += ExactRat(static_cast<long>(i + 1)) * a.coeff(i + 1) * f.coeff(k - i);
        }
        f.set_coeff(k + 1, acc / ExactRat(static_cast<long>(k + 1)));
    }
    return f;
}

TruncatedSeries series_inv_sqrt(const TruncatedSeries& a) {
    if (!(a.coeff(0) == ExactRat(1)))
        throw std::invalid_argument("series_inv_sqrt: constant term must be 1");
    const std::size_t n = a.order();
    TruncatedSeries s(n);
    s.set_coeff(0, ExactRat(1));
    // From s = a^(-1/2): 2as' + sa' = 0. Extracting t^k and isolating the
    // leading a_0 = 1 term gives s_{k+1} in terms of s_0..s_k.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        ExactRat acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.coeff(j).is_zero()) continue;
            acc += ExactRat(2) * a.coeff(j) * ExactRat(static_cast<long>(k - j + 1)) *
                   s.coeff(k - j + 1);
        }
        for (std::size_t j = 0; j <= k; ++j) {
            if (a.coeff(k - j + 1).is_zero()) continue;
            acc += ExactRat(static_cast<long>(k - j + 1)) * a.coeff(k - j + 1) * s.coeff(j);
        }
        s.set_coeff(k + 1, -acc / ExactRat(static_cast<long>(2 * (k + 1))));
    }
    return s;
}

ExactRat series_coeff(const TruncatedSeries& a, std::size_t k) { return a.coeff(k); }

TruncatedSeries series_shift_down(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument("series_shift_down: nonzero constant term");
    if (a.order() < 2) throw std::invalid_argument("series_shift_down: order too small");
    TruncatedSeries r(a.order() - 1);
    for (std::size_t k = 0; k + 1 < a.order(); ++k) r.set_coeff(k, a.coeff(k + 1));
    return r;
}

}  // namespace trinom
