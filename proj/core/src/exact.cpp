#include "trinom/exact.hpp"

#include <cstring>
#include <mutex>
#include <vector>

namespace trinom {

namespace {

std::string mpz_to_string(mpz_srcptr z) {
    std::string s(mpz_sizeinbase(z, 10) + 2, '\0');
    mpz_get_str(s.data(), 10, z);
    s.resize(std::strlen(s.c_str()));
    return s;
}

}  // namespace

std::string ExactInt::str() const { return mpz_to_string(z_); }

std::string ExactRat::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::string QuadElem::str() const {
    return "(" + a_.str() + " + " + b_.str() + "*w | w^2=" + d_.str() + ")";
}

ExactInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    // Monotone append-only memo; the lock makes the table appear fully built
    // to every caller.
    static std::mutex mu;
    static std::vector<ExactInt> table{ExactInt(1)};
    std::scoped_lock lock(mu);
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * ExactInt(static_cast<long>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

ExactInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative row index");
    if (k < 0 || k > n) return ExactInt(0);
    ExactRat r = ExactRat(factorial(n)) / (ExactRat(factorial(k)) * ExactRat(factorial(n - k)));
    return r.numerator();
}

ExactInt falling_factorial(long n, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
    ExactInt r(1);
    for (long i = 0; i < k; ++i) r *= ExactInt(n - i);
    return r;
}

ExactRat pochhammer(const ExactRat& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    ExactRat r(1);
    ExactRat term(a);
    for (long i = 0; i < k; ++i) {
        r *= term;
        term += ExactRat(1);
    }
    return r;
}

}  // namespace trinom
