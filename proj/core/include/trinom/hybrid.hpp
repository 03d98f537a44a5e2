/**
 * @file hybrid.hpp
 * @brief The polynomial families: two-variable Hermite, two-variable
 *        Laguerre, the hybrid family interpolating between them, its
 *        associated variants, and Legendre evaluation.
 *
 * Everything evaluates at exact scalar arguments: ExactRat, or QuadElem when
 * the argument lives in a quadratic extension ring (the route that turns the
 * Legendre connection into integer sequence values). The evaluators are
 * plain terminating sums; coefficients are built from exact term ratios.
 */
#ifndef TRINOM_HYBRID_HPP
#define TRINOM_HYBRID_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "trinom/exact.hpp"

namespace trinom {

namespace detail {

/// sum_k coef[k] * a^(n - m_step*k) * b^k, for k = 0..coef.size()-1.
template <class S>
S family_sum(long n, long m_step, const S& a, const S& b, const std::vector<ExactRat>& coef) {
    const long top = static_cast<long>(coef.size()) - 1;
    std::vector<S> bpow;
    bpow.reserve(coef.size());
    bpow.push_back(one_like(b));
    for (long k = 1; k <= top; ++k) bpow.push_back(bpow.back() * b);

    const S a_step = pow(a, static_cast<unsigned long>(m_step));
    S apow = pow(a, static_cast<unsigned long>(n - m_step * top));
    S acc = zero_like(a);
    for (long k = top; k >= 0; --k) {
        acc = acc + apow * bpow[static_cast<std::size_t>(k)] * coef[static_cast<std::size_t>(k)];
        if (k > 0) apow = apow * a_step;
    }
    return acc;
}

// coef[k] = n! / (k! (n - m k)!)
inline std::vector<ExactRat> hermite_coeffs(long n, long m) {
    std::vector<ExactRat> c{ExactRat(1)};
    for (long k = 0; n - m * (k + 1) >= 0; ++k)
        c.push_back(c.back() * ExactRat(falling_factorial(n - m * k, m), ExactInt(k + 1)));
    return c;
}

// coef[k] = n! / ((k!)^2 (n - 2k)!)
inline std::vector<ExactRat> pi_coeffs(long n) {
    std::vector<ExactRat> c{ExactRat(1)};
    for (long k = 0; n - 2 * (k + 1) >= 0; ++k)
        c.push_back(c.back() *
                    ExactRat((n - 2 * k) * (n - 2 * k - 1), (k + 1) * (k + 1)));
    return c;
}

// coef[k] = n! / ((n - 2k)! k! (k+p)!)
inline std::vector<ExactRat> pi_assoc_coeffs(long n, long p) {
    std::vector<ExactRat> c{ExactRat(ExactInt(1), factorial(p))};
    for (long k = 0; n - 2 * (k + 1) >= 0; ++k)
        c.push_back(c.back() *
                    ExactRat((n - 2 * k) * (n - 2 * k - 1), (k + 1) * (k + p + 1)));
    return c;
}

// coef[k] = (-1)^k n! / ((k!)^2 (n - k)!)
inline std::vector<ExactRat> laguerre_coeffs(long n) {
    std::vector<ExactRat> c{ExactRat(1)};
    for (long k = 0; k + 1 <= n; ++k)
        c.push_back(c.back() * ExactRat(-(n - k), (k + 1) * (k + 1)));
    return c;
}

inline void require_degree(long n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative degree");
}

}  // namespace detail

/// Two-variable Hermite polynomial H_n(x, y) = n! sum_k x^(n-2k) y^k / (k!(n-2k)!).
template <class S>
S hkdf(long n, const S& x, const S& y) {
    detail::require_degree(n, "hkdf");
    return detail::family_sum(n, 2, x, y, detail::hermite_coeffs(n, 2));
}

/// Order-m analogue: n! sum_k x^(n-mk) y^k / (k!(n-mk)!); m_step = 2 gives hkdf.
template <class S>
S hkdf_m(long n, long m_step, const S& x, const S& y) {
    detail::require_degree(n, "hkdf_m");
    if (m_step < 2) throw std::invalid_argument("hkdf_m: m_step must be >= 2");
    return detail::family_sum(n, m_step, x, y, detail::hermite_coeffs(n, m_step));
}

/// Two-variable Laguerre polynomial L_n(x, y) = n! sum_k (-1)^k y^(n-k) x^k / ((k!)^2 (n-k)!).
template <class S>
S laguerre2(long n, const S& x, const S& y) {
    detail::require_degree(n, "laguerre2");
    return detail::family_sum(n, 1, y, x, detail::laguerre_coeffs(n));
}

/// Hybrid Hermite-Laguerre polynomial Pi_n(x, y) = n! sum_k y^(n-2k) x^k / ((k!)^2 (n-2k)!).
template <class S>
S hybrid_pi(long n, const S& x, const S& y) {
    detail::require_degree(n, "hybrid_pi");
    return detail::family_sum(n, 2, y, x, detail::pi_coeffs(n));
}

/// Associated hybrid polynomial Pi^p_n(x, y) = n! sum_k x^k y^(n-2k) / ((n-2k)! k! (k+p)!).
template <class S>
S hybrid_pi_assoc(long n, long p, const S& x, const S& y) {
    detail::require_degree(n, "hybrid_pi_assoc");
    if (p < 0) throw std::invalid_argument("hybrid_pi_assoc: p must be >= 0");
    return detail::family_sum(n, 2, y, x, detail::pi_assoc_coeffs(n, p));
}

/// Legendre polynomial P_n at a rational or quadratic-ring argument, via the
/// three-term recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}, P_0 = 1,
/// P_1 = x.
template <class S>
S legendre(long n, const S& x) {
    detail::require_degree(n, "legendre");
    S prev = one_like(x);
    if (n == 0) return prev;
    S cur = x;
    for (long k = 1; k < n; ++k) {
        S next = (x * cur * ExactRat(2 * k + 1) - prev * ExactRat(k)) / ExactRat(k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Pi_n(x, y) evaluated as s^n P_n(y/s) with s = sqrt(y^2 - 4x), which must
/// be a nonzero rational; the result does not depend on the sign chosen for s.
ExactRat pi_via_legendre(long n, const ExactRat& x, const ExactRat& y);

/// Same bridge inside Q[w]/(w^2 - d) with d = y^2 - 4x (s = w). The radical
/// part of the result vanishes identically when the bridge identity holds.
QuadElem pi_via_legendre(long n, const ExactRat& x, const ExactRat& y, const ExactInt& ring_disc);

/// c(n) computed as w^n P_n(-w/3) in Q[w]/(w^2 + 3). A nonzero radical part
/// or a non-integer rational part signals an implementation fault.
ExactInt ctc_via_legendre(long n);

/// H_n(x, y) through the terminating 2F0-style sum
/// x^n sum_k (-n/2)_k ((1-n)/2)_k z^k / k! with z = 4y/x^2; x must be nonzero.
ExactRat hkdf_via_2f0(long n, const ExactRat& x, const ExactRat& y);

/// (He_n(x), H_n(x)): the probabilists' and physicists' Hermite values,
/// obtained as H_n(x, -1/2) and H_n(2x, -1).
std::pair<ExactRat, ExactRat> hermite_reductions(long n, const ExactRat& x);

enum class RecurrenceFamily { HKDF, PI };

/// One step of the corrected three-term recurrences:
///   HKDF: x H_n(x,y) + 2yn H_{n-1}(x,y)   (equals H_{n+1}(x,y))
///   PI:   y Pi_n(x,y) + 2nx Pi^1_{n-1}(x,y)   (equals Pi_{n+1}(x,y))
ExactRat recurrence_step(RecurrenceFamily family, long n, const ExactRat& x, const ExactRat& y);

}  // namespace trinom

#endif  // TRINOM_HYBRID_HPP
