/**
 * @file poly.hpp
 * @brief Dense and Laurent polynomials with exact rational coefficients.
 *
 * These are the brute-force expansion oracles: central_coeff reads the
 * coefficient of x^n out of (1 + x + x^m)^n, laurent_trinomial_coeff out of
 * (1 + x + 1/x)^n. Multiplication is schoolbook; powers use binary
 * exponentiation.
 */
#ifndef TRINOM_POLY_HPP
#define TRINOM_POLY_HPP

#include <vector>

#include "trinom/exact.hpp"

namespace trinom {

class DensePoly {
public:
    DensePoly() = default;  // zero polynomial
    explicit DensePoly(std::vector<ExactRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static DensePoly constant(ExactRat v) { return DensePoly({std::move(v)}); }
    static DensePoly monomial(ExactRat v, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ExactRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ExactRat(0); }
    const std::vector<ExactRat>& coeffs() const { return c_; }

    friend DensePoly operator+(const DensePoly& f, const DensePoly& g);
    friend DensePoly operator*(const DensePoly& f, const DensePoly& g);
    friend bool operator==(const DensePoly& f, const DensePoly& g) { return f.c_ == g.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ExactRat> c_;  // c_[i] = coefficient of x^i
};

/// Polynomial in x and 1/x; coefficients start at exponent `offset`.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero polynomial
    LaurentPoly(std::vector<ExactRat> coeffs, long offset) : c_(std::move(coeffs)), off_(offset) {
        trim();
    }

    bool is_zero() const { return c_.empty(); }
    long min_degree() const { return off_; }
    long max_degree() const { return off_ + static_cast<long>(c_.size()) - 1; }
    ExactRat coeff(long j) const {
        long i = j - off_;
        if (i < 0 || i >= static_cast<long>(c_.size())) return ExactRat(0);
        return c_[static_cast<std::size_t>(i)];
    }

    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return (f.is_zero() && g.is_zero()) || (f.off_ == g.off_ && f.c_ == g.c_);
    }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            off_ = 0;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        off_ += static_cast<long>(lead);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ExactRat> c_;
    long off_ = 0;
};

DensePoly poly_pow(const DensePoly& base, unsigned long n);
LaurentPoly poly_pow(const LaurentPoly& base, unsigned long n);

/// Coefficient of x^n in (1 + x + x^m_step)^n; m_step >= 2, n >= 0.
ExactInt central_coeff(long n, long m_step);

/// Coefficient of x^j in (1 + x + 1/x)^n; zero for |j| > n.
ExactInt laurent_trinomial_coeff(long n, long j);

}  // namespace trinom

#endif  // TRINOM_POLY_HPP
