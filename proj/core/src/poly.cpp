#include "trinom/poly.hpp"

#include <algorithm>

namespace trinom {

DensePoly DensePoly::monomial(ExactRat v, std::size_t deg) {
    std::vector<ExactRat> c(deg + 1, ExactRat(0));
    c[deg] = std::move(v);
    return DensePoly(std::move(c));
}

DensePoly operator+(const DensePoly& f, const DensePoly& g) {
    std::vector<ExactRat> c(std::max(f.c_.size(), g.c_.size()), ExactRat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < f.c_.size()) c[i] += f.c_[i];
        if (i < g.c_.size()) c[i] += g.c_[i];
    }
    return DensePoly(std::move(c));
}

DensePoly operator*(const DensePoly& f, const DensePoly& g) {
    if (f.is_zero() || g.is_zero()) return DensePoly();
    std::vector<ExactRat> c(f.c_.size() + g.c_.size() - 1, ExactRat(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            c[i + j] += f.c_[i] * g.c_[j];
    return DensePoly(std::move(c));
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    long lo = std::min(f.off_, g.off_);
    long hi = std::max(f.max_degree(), g.max_degree());
    std::vector<ExactRat> c(static_cast<std::size_t>(hi - lo + 1), ExactRat(0));
    for (long j = lo; j <= hi; ++j)
        c[static_cast<std::size_t>(j - lo)] = f.coeff(j) + g.coeff(j);
    return LaurentPoly(std::move(c), lo);
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return LaurentPoly();
    std::vector<ExactRat> c(f.c_.size() + g.c_.size() - 1, ExactRat(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            c[i + j] += f.c_[i] * g.c_[j];
    return LaurentPoly(std::move(c), f.off_ + g.off_);
}

namespace {

template <class P>
P pow_impl(P base, unsigned long n, P unit) {
    P acc = std::move(unit);
    while (n != 0) {
        if (n & 1UL) acc = acc * base;
        n >>= 1UL;
        if (n != 0) base = base * base;
    }
    return acc;
}

}  // namespace

DensePoly poly_pow(const DensePoly& base, unsigned long n) {
    return pow_impl(base, n, DensePoly::constant(ExactRat(1)));
}

LaurentPoly poly_pow(const LaurentPoly& base, unsigned long n) {
    return pow_impl(base, n, LaurentPoly({ExactRat(1)}, 0));
}

ExactInt central_coeff(long n, long m_step) {
    if (n < 0) throw std::invalid_argument("central_coeff: negative index");
    if (m_step < 2) throw std::invalid_argument("central_coeff: m_step must be >= 2");
    std::vector<ExactRat> tri(static_cast<std::size_t>(m_step) + 1, ExactRat(0));
    tri[0] = ExactRat(1);
    tri[1] = ExactRat(1);
    tri[static_cast<std::size_t>(m_step)] = ExactRat(1);
    DensePoly p = poly_pow(DensePoly(std::move(tri)), static_cast<unsigned long>(n));
    ExactRat c = p.coeff(static_cast<std::size_t>(n));
    return c.numerator();  // expansion coefficients are integers
}

ExactInt laurent_trinomial_coeff(long n, long j) {
    if (n < 0) throw std::invalid_argument("laurent_trinomial_coeff: negative index");
    LaurentPoly tri({ExactRat(1), ExactRat(1), ExactRat(1)}, -1);  // 1/x + 1 + x
    LaurentPoly p = poly_pow(tri, static_cast<unsigned long>(n));
    return p.coeff(j).numerator();
}

}  // namespace trinom
