/**
 * @file genfun.hpp
 * @brief Generating functions as exact truncated series.
 *
 * The EGFs all have the shape exp(yt) * B(t) where B collects the inverse
 * factorial weights (a modified-Bessel-style series after x -> 2t); the OGFs
 * are inverse square roots of quadratics. Coefficients come out as exact
 * rationals, so comparing them against the closed-form evaluators is an
 * equality check, not an approximation.
 */
#ifndef TRINOM_GENFUN_HPP
#define TRINOM_GENFUN_HPP

#include "trinom/exact.hpp"
#include "trinom/series.hpp"

namespace trinom {

/// Series in t for I_alpha(2t) = sum_r t^(alpha+2r) / (r! (alpha+r)!); alpha >= 0.
TruncatedSeries bessel_i_series(long alpha_p, std::size_t order);

/// Tricomi-style series sum_r t^r / (r! (r+alpha)!); integer alpha >= 0 only.
TruncatedSeries tricomi_series(long alpha_p, std::size_t order);

/// exp(t) I_0(2t): n! times coefficient n is the central trinomial coefficient.
TruncatedSeries ctc_egf(std::size_t order);

/// exp(yt) * sum_r x^r t^(2r) / (r! (r+p)!): n! times coefficient n equals
/// Pi^p_n(x, y). The fractional-power prefactor of the Bessel form never
/// appears; for integer p the combined series is rational as written.
TruncatedSeries assoc_egf(long alpha_p, const ExactRat& x, std::size_t order,
                          const ExactRat& y = ExactRat(1));

/// 1 / sqrt(1 - 2yt + (y^2 - 4x) t^2): coefficient n equals Pi_n(x, y).
TruncatedSeries pi_ogf(const ExactRat& x, const ExactRat& y, std::size_t order);

/// 1 / sqrt(1 - 2xt + t^2): coefficient n equals P_n(x).
TruncatedSeries legendre_ogf(const ExactRat& x, std::size_t order);

/// exp(xt + yt^2): n! times coefficient n equals H_n(x, y).
TruncatedSeries hkdf_egf(const ExactRat& x, const ExactRat& y, std::size_t order);

enum class GenFunKind { HKDF_EGF, CTC_EGF, ASSOC_EGF, PI_OGF, LEGENDRE_OGF, BESSEL_I, TRICOMI };

/// Parameter record for building any of the series above; the applicable
/// parameters depend on the kind and are validated by build_series.
struct GenFunSpec {
    GenFunKind kind = GenFunKind::CTC_EGF;
    std::size_t order = 200;
    ExactRat x = ExactRat(1);
    ExactRat y = ExactRat(1);
    long alpha_p = 0;
};

TruncatedSeries build_series(const GenFunSpec& spec);

}  // namespace trinom

#endif  // TRINOM_GENFUN_HPP
