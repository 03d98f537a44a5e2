#include "trinom/genfun.hpp"

#include <stdexcept>

namespace trinom {

namespace {

void require_alpha(long alpha_p, const char* who) {
    if (alpha_p < 0) throw std::invalid_argument(std::string(who) + ": alpha must be >= 0");
}

TruncatedSeries exp_linear(const ExactRat& y, std::size_t order) {
    return series_exp(TruncatedSeries::from_coeffs({ExactRat(0), y}, order));
}

}  // namespace

TruncatedSeries bessel_i_series(long alpha_p, std::size_t order) {
    require_alpha(alpha_p, "bessel_i_series");
    TruncatedSeries s(order);
    ExactRat coeff(ExactInt(1), factorial(alpha_p));  // r = 0
    for (long r = 0;; ++r) {
        const long e = alpha_p + 2 * r;
        if (e >= static_cast<long>(order)) break;
        s.set_coeff(static_cast<std::size_t>(e), coeff);
        coeff /= ExactRat(ExactInt(r + 1) * ExactInt(alpha_p + r + 1));
    }
    return s;
}

TruncatedSeries tricomi_series(long alpha_p, std::size_t order) {
    require_alpha(alpha_p, "tricomi_series");
    TruncatedSeries s(order);
    ExactRat coeff(ExactInt(1), factorial(alpha_p));
    for (long r = 0; r < static_cast<long>(order); ++r) {
        s.set_coeff(static_cast<std::size_t>(r), coeff);
        coeff /= ExactRat(ExactInt(r + 1) * ExactInt(alpha_p + r + 1));
    }
    return s;
}

TruncatedSeries ctc_egf(std::size_t order) {
    return series_mul(exp_linear(ExactRat(1), order), bessel_i_series(0, order));
}

TruncatedSeries assoc_egf(long alpha_p, const ExactRat& x, std::size_t order, const ExactRat& y) {
    require_alpha(alpha_p, "assoc_egf");
    TruncatedSeries b(order);
    ExactRat coeff(ExactInt(1), factorial(alpha_p));
    ExactRat xpow(1);
    for (long r = 0; 2 * r < static_cast<long>(order); ++r) {
        b.set_coeff(static_cast<std::size_t>(2 * r), coeff * xpow);
        coeff /= ExactRat(ExactInt(r + 1) * ExactInt(alpha_p + r + 1));
        xpow *= x;
    }
    return series_mul(exp_linear(y, order), b);
}

TruncatedSeries pi_ogf(const ExactRat& x, const ExactRat& y, std::size_t order) {
    const ExactRat quad = y * y - ExactRat(4) * x;
    return series_inv_sqrt(
        TruncatedSeries::from_coeffs({ExactRat(1), ExactRat(-2) * y, quad}, order));
}

TruncatedSeries legendre_ogf(const ExactRat& x, std::size_t order) {
    return series_inv_sqrt(
        TruncatedSeries::from_coeffs({ExactRat(1), ExactRat(-2) * x, ExactRat(1)}, order));
}

TruncatedSeries hkdf_egf(const ExactRat& x, const ExactRat& y, std::size_t order) {
    return series_exp(TruncatedSeries::from_coeffs({ExactRat(0), x, y}, order));
}

TruncatedSeries build_series(const GenFunSpec& spec) {
    switch (spec.kind) {
        case GenFunKind::HKDF_EGF: return hkdf_egf(spec.x, spec.y, spec.order);
        case GenFunKind::CTC_EGF: return ctc_egf(spec.order);
        case GenFunKind::ASSOC_EGF: return assoc_egf(spec.alpha_p, spec.x, spec.order, spec.y);
        case GenFunKind::PI_OGF: return pi_ogf(spec.x, spec.y, spec.order);
        case GenFunKind::LEGENDRE_OGF: return legendre_ogf(spec.x, spec.order);
        case GenFunKind::BESSEL_I: return bessel_i_series(spec.alpha_p, spec.order);
        case GenFunKind::TRICOMI: return tricomi_series(spec.alpha_p, spec.order);
    }
    throw std::logic_error("build_series: bad enum");
}

}  // namespace trinom
