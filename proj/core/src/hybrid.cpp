#include "trinom/hybrid.hpp"

namespace trinom {

namespace {

// +sqrt of a nonnegative rational that is a perfect square.
ExactRat rational_sqrt(const ExactRat& v) {
    return ExactRat(v.numerator().sqrt(), v.denominator().sqrt());
}

bool is_perfect_square(const ExactRat& v) {
    return v.sign() >= 0 && v.numerator().is_perfect_square() &&
           v.denominator().is_perfect_square();
}

}  // namespace

ExactRat pi_via_legendre(long n, const ExactRat& x, const ExactRat& y) {
    detail::require_degree(n, "pi_via_legendre");
    const ExactRat disc = y * y - ExactRat(4) * x;
    if (disc.is_zero())
        throw std::invalid_argument("pi_via_legendre: degenerate discriminant y^2 - 4x = 0");
    if (!is_perfect_square(disc))
        throw std::invalid_argument(
            "pi_via_legendre: y^2 - 4x is not a rational square; use the ring overload");
    const ExactRat s = rational_sqrt(disc);
    return pow(s, static_cast<unsigned long>(n)) * legendre(n, y / s);
}

QuadElem pi_via_legendre(long n, const ExactRat& x, const ExactRat& y,
                         const ExactInt& ring_disc) {
    detail::require_degree(n, "pi_via_legendre");
    const ExactRat disc = y * y - ExactRat(4) * x;
    if (!(disc == ExactRat(ring_disc)))
        throw std::invalid_argument("pi_via_legendre: ring discriminant differs from y^2 - 4x");
    if (ring_disc.is_zero())
        throw std::invalid_argument("pi_via_legendre: degenerate discriminant y^2 - 4x = 0");
    // s = w, so y/s = y w / d and s^n = w^n.
    const QuadElem w(ExactRat(0), ExactRat(1), ring_disc);
    const QuadElem arg(ExactRat(0), y / ExactRat(ring_disc), ring_disc);
    return w.pow(static_cast<unsigned long>(n)) * legendre(n, arg);
}

ExactInt ctc_via_legendre(long n) {
    detail::require_degree(n, "ctc_via_legendre");
    const ExactInt disc(-3);
    const QuadElem w(ExactRat(0), ExactRat(1), disc);          // w = i sqrt(3)
    const QuadElem arg(ExactRat(0), ExactRat(-1, 3), disc);    // -w/3 = -i/sqrt(3)
    const QuadElem value = w.pow(static_cast<unsigned long>(n)) * legendre(n, arg);
    if (!value.radical_part().is_zero())
        throw std::logic_error("ctc_via_legendre: nonzero radical part");
    const ExactRat r = value.rational_part();
    if (!r.is_integer() || r.sign() <= 0)
        throw std::logic_error("ctc_via_legendre: rational part is not a positive integer");
    return r.numerator();
}

ExactRat hkdf_via_2f0(long n, const ExactRat& x, const ExactRat& y) {
    detail::require_degree(n, "hkdf_via_2f0");
    if (x.is_zero()) throw std::invalid_argument("hkdf_via_2f0: x must be nonzero");
    const ExactRat z = ExactRat(4) * y / (x * x);
    const ExactRat a1(-n, 2), a2(1 - n, 2);
    ExactRat term(1), sum(1);  // k = 0
    ExactRat zpow(1);
    ExactRat p1(1), p2(1);
    for (long k = 1; k <= n / 2; ++k) {
        p1 *= a1 + ExactRat(k - 1);
        p2 *= a2 + ExactRat(k - 1);
        zpow *= z;
        term = p1 * p2 * zpow / ExactRat(factorial(k));
        sum += term;
    }
    return pow(x, static_cast<unsigned long>(n)) * sum;
}

std::pair<ExactRat, ExactRat> hermite_reductions(long n, const ExactRat& x) {
    detail::require_degree(n, "hermite_reductions");
    return {hkdf(n, x, ExactRat(-1, 2)), hkdf(n, ExactRat(2) * x, ExactRat(-1))};
}

ExactRat recurrence_step(RecurrenceFamily family, long n, const ExactRat& x, const ExactRat& y) {
    if (n < 1) throw std::invalid_argument("recurrence_step: n must be >= 1");
    switch (family) {
        case RecurrenceFamily::HKDF:
            return x * hkdf(n, x, y) + ExactRat(2 * n) * y * hkdf(n - 1, x, y);
        case RecurrenceFamily::PI:
            return y * hybrid_pi(n, x, y) +
                   ExactRat(2 * n) * x * hybrid_pi_assoc(n - 1, 1, x, y);
    }
    throw std::logic_error("recurrence_step: bad enum");
}

}  // namespace trinom
