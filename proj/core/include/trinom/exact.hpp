/**
 * @file exact.hpp
 * @brief Exact arithmetic substrate: arbitrary-precision integers, normalized
 *        rationals, and the quadratic extension ring Q[w]/(w^2 - d).
 *
 * ExactInt and ExactRat are thin value-semantic wrappers over GMP's mpz/mpq.
 * Rationals are canonical at all times: positive denominator, gcd 1, so
 * structural equality is arithmetic equality. QuadElem carries one fixed
 * discriminant per value; operations on mismatched rings are rejected.
 */
#ifndef TRINOM_EXACT_HPP
#define TRINOM_EXACT_HPP

#include <gmp.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace trinom {

class ExactRat;

class ExactInt {
public:
    // ---- constructors / assignment ----
    ExactInt() noexcept { mpz_init(z_); }
    ExactInt(long v) { mpz_init_set_si(z_, v); }
    explicit ExactInt(const std::string& decimal) {
        if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("ExactInt: not a decimal integer: '" + decimal + "'");
        }
    }
    ExactInt(const ExactInt& o) { mpz_init_set(z_, o.z_); }
    ExactInt(ExactInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ExactInt& operator=(const ExactInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ExactInt& operator=(ExactInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~ExactInt() { mpz_clear(z_); }

    // ---- arithmetic ----
    ExactInt& operator+=(const ExactInt& o) { mpz_add(z_, z_, o.z_); return *this; }
    ExactInt& operator-=(const ExactInt& o) { mpz_sub(z_, z_, o.z_); return *this; }
    ExactInt& operator*=(const ExactInt& o) { mpz_mul(z_, z_, o.z_); return *this; }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { a += b; return a; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { a -= b; return a; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { a *= b; return a; }
    ExactInt operator-() const {
        ExactInt r(*this);
        mpz_neg(r.z_, r.z_);
        return r;
    }

    ExactInt pow(unsigned long e) const {
        ExactInt r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    // ---- comparison ----
    friend bool operator==(const ExactInt& a, const ExactInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // ---- queries ----
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool is_perfect_square() const { return mpz_sgn(z_) >= 0 && mpz_perfect_square_p(z_) != 0; }
    /// Exact square root; the value must be a perfect square.
    ExactInt sqrt() const {
        if (!is_perfect_square()) throw std::invalid_argument("ExactInt::sqrt: not a perfect square");
        ExactInt r;
        mpz_sqrt(r.z_, z_);
        return r;
    }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("ExactInt::to_long: value out of range");
        return mpz_get_si(z_);
    }

    std::string str() const;

private:
    mpz_t z_;
    friend class ExactRat;
};

/// n! with a process-wide memo table; negative input rejected.
ExactInt factorial(long n);

/// n!/(k!(n-k)!) for 0 <= k <= n, zero for k outside that range; n must be >= 0.
ExactInt binomial(long n, long k);

/// n(n-1)...(n-k+1), the falling factorial with k factors; k must be >= 0.
ExactInt falling_factorial(long n, long k);

class ExactRat {
public:
    // ---- constructors / assignment ----
    ExactRat() noexcept { mpq_init(q_); }
    ExactRat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    ExactRat(const ExactInt& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.z_);
    }
    ExactRat(long num, long den) : ExactRat(ExactInt(num), ExactInt(den)) {}
    ExactRat(const ExactInt& num, const ExactInt& den) {
        if (den.is_zero()) throw std::invalid_argument("ExactRat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.z_);
        mpz_set(mpq_denref(q_), den.z_);
        mpq_canonicalize(q_);
    }
    ExactRat(const ExactRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    ExactRat(ExactRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ExactRat& operator=(const ExactRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    ExactRat& operator=(ExactRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~ExactRat() { mpq_clear(q_); }

    // ---- arithmetic (results stay canonical) ----
    ExactRat& operator+=(const ExactRat& o) { mpq_add(q_, q_, o.q_); return *this; }
    ExactRat& operator-=(const ExactRat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    ExactRat& operator*=(const ExactRat& o) { mpq_mul(q_, q_, o.q_); return *this; }
    ExactRat& operator/=(const ExactRat& o) {
        if (o.is_zero()) throw std::invalid_argument("ExactRat: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend ExactRat operator+(ExactRat a, const ExactRat& b) { a += b; return a; }
    friend ExactRat operator-(ExactRat a, const ExactRat& b) { a -= b; return a; }
    friend ExactRat operator*(ExactRat a, const ExactRat& b) { a *= b; return a; }
    friend ExactRat operator/(ExactRat a, const ExactRat& b) { a /= b; return a; }
    ExactRat operator-() const {
        ExactRat r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    ExactRat pow(unsigned long e) const {
        ExactRat r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
        return r;  // powers of a canonical value are canonical
    }

    // ---- comparison ----
    friend bool operator==(const ExactRat& a, const ExactRat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // ---- queries ----
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    ExactInt numerator() const {
        ExactInt r;
        mpz_set(r.z_, mpq_numref(q_));
        return r;
    }
    ExactInt denominator() const {
        ExactInt r;
        mpz_set(r.z_, mpq_denref(q_));
        return r;
    }

    /// "num/den", or plain "num" when the value is an integer.
    std::string str() const;

private:
    mpq_t q_;
};

inline ExactRat pow(const ExactRat& x, unsigned long e) { return x.pow(e); }

/// Rising factorial (a)_k = a(a+1)...(a+k-1); k must be >= 0, (a)_0 = 1.
ExactRat pochhammer(const ExactRat& a, long k);

/**
 * Element a + b*w of Q[w]/(w^2 - d), with the discriminant d fixed per value.
 * The default ring has d = -3, where w plays the role of i*sqrt(3).
 */
class QuadElem {
public:
    QuadElem(ExactRat rational_part, ExactRat radical_part, ExactInt discriminant = ExactInt(-3))
        : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(std::move(discriminant)) {}

    static QuadElem from_rational(ExactRat r, ExactInt discriminant = ExactInt(-3)) {
        return QuadElem(std::move(r), ExactRat(0), std::move(discriminant));
    }

    const ExactRat& rational_part() const { return a_; }
    const ExactRat& radical_part() const { return b_; }
    const ExactInt& discriminant() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        check_ring(x, y);
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        check_ring(x, y);
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }
    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }
    // (a + bw)(c + ew) = (ac + be*d) + (ae + bc)w, using w^2 = d
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        check_ring(x, y);
        return QuadElem(x.a_ * y.a_ + x.b_ * y.b_ * ExactRat(x.d_),
                        x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }
    friend QuadElem operator*(const QuadElem& x, const ExactRat& s) {
        return QuadElem(x.a_ * s, x.b_ * s, x.d_);
    }
    friend QuadElem operator*(const ExactRat& s, const QuadElem& x) { return x * s; }
    friend QuadElem operator/(const QuadElem& x, const ExactRat& s) {
        if (s.is_zero()) throw std::invalid_argument("QuadElem: division by zero scalar");
        return QuadElem(x.a_ / s, x.b_ / s, x.d_);
    }

    QuadElem pow(unsigned long e) const {
        QuadElem base(*this);
        QuadElem acc = from_rational(ExactRat(1), d_);
        while (e != 0) {  // binary exponentiation
            if (e & 1UL) acc = acc * base;
            e >>= 1UL;
            if (e != 0) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    static void check_ring(const QuadElem& x, const QuadElem& y) {
        if (!(x.d_ == y.d_))
            throw std::invalid_argument("QuadElem: mismatched discriminants");
    }

    ExactRat a_, b_;
    ExactInt d_;
};

inline QuadElem pow(const QuadElem& x, unsigned long e) { return x.pow(e); }

inline std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const ExactRat& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const QuadElem& v) { return os << v.str(); }

// ---- helpers for code generic over ExactRat / QuadElem ----
inline ExactRat zero_like(const ExactRat&) { return ExactRat(0); }
inline ExactRat one_like(const ExactRat&) { return ExactRat(1); }
inline QuadElem zero_like(const QuadElem& q) {
    return QuadElem::from_rational(ExactRat(0), q.discriminant());
}
inline QuadElem one_like(const QuadElem& q) {
    return QuadElem::from_rational(ExactRat(1), q.discriminant());
}

}  // namespace trinom

#endif  // TRINOM_EXACT_HPP
