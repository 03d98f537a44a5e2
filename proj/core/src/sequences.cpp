#include "trinom/sequences.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "trinom/hybrid.hpp"
#include "trinom/poly.hpp"

namespace trinom {

// ---- SeqSpec ----

std::string family_name(SeqFamily f) {
    switch (f) {
        case SeqFamily::CTC: return "CTC";
        case SeqFamily::MOTZKIN: return "MOTZKIN";
        case SeqFamily::TRINOMIAL_COL: return "TRINOMIAL_COL";
        case SeqFamily::ASSOC_CTC: return "ASSOC_CTC";
        case SeqFamily::M_ORDER_CTC: return "M_ORDER_CTC";
        case SeqFamily::GENERALIZED_D: return "GENERALIZED_D";
    }
    throw std::logic_error("family_name: bad enum");
}

std::optional<SeqFamily> family_from_name(std::string_view name) {
    for (SeqFamily f : {SeqFamily::CTC, SeqFamily::MOTZKIN, SeqFamily::TRINOMIAL_COL,
                        SeqFamily::ASSOC_CTC, SeqFamily::M_ORDER_CTC, SeqFamily::GENERALIZED_D})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

SeqSpec SeqSpec::trinomial_col(long column) {
    SeqSpec s(SeqFamily::TRINOMIAL_COL);
    s.column_ = column;
    return s;
}

SeqSpec SeqSpec::assoc_ctc(long p) {
    if (p < 0) throw std::invalid_argument("SeqSpec: p must be >= 0");
    SeqSpec s(SeqFamily::ASSOC_CTC);
    s.p_ = p;
    return s;
}

SeqSpec SeqSpec::m_order_ctc(long m_step, long p) {
    if (m_step < 2) throw std::invalid_argument("SeqSpec: m_step must be >= 2");
    if (p < 0) throw std::invalid_argument("SeqSpec: p must be >= 0");
    SeqSpec s(SeqFamily::M_ORDER_CTC);
    s.m_ = m_step;
    s.p_ = p;
    return s;
}

SeqSpec SeqSpec::generalized_d(long m_step) {
    if (m_step < 2) throw std::invalid_argument("SeqSpec: m_step must be >= 2");
    SeqSpec s(SeqFamily::GENERALIZED_D);
    s.m_ = m_step;
    return s;
}

bool SeqSpec::integer_valued() const {
    switch (family_) {
        case SeqFamily::ASSOC_CTC:
        case SeqFamily::M_ORDER_CTC:
            return p_ <= 1;
        default:
            return true;
    }
}

std::string SeqSpec::describe() const {
    switch (family_) {
        case SeqFamily::CTC:
        case SeqFamily::MOTZKIN:
            return family_name(family_);
        case SeqFamily::TRINOMIAL_COL:
            return family_name(family_) + "(column=" + std::to_string(column_) + ")";
        case SeqFamily::ASSOC_CTC:
            return family_name(family_) + "(p=" + std::to_string(p_) + ")";
        case SeqFamily::M_ORDER_CTC:
            return family_name(family_) + "(m=" + std::to_string(m_) + ",p=" + std::to_string(p_) +
                   ")";
        case SeqFamily::GENERALIZED_D:
            return family_name(family_) + "(m=" + std::to_string(m_) + ")";
    }
    throw std::logic_error("SeqSpec::describe: bad enum");
}

// ---- direct sums ----
//
// Each evaluator walks the defining sum with the exact ratio between
// consecutive terms, so intermediates never exceed the size of the result.

ExactInt ctc(long n) {
    if (n < 0) throw std::invalid_argument("ctc: negative index");
    ExactRat term(1), sum(1);
    for (long k = 0; n - 2 * (k + 1) >= 0; ++k) {
        term *= ExactRat((n - 2 * k) * (n - 2 * k - 1), (k + 1) * (k + 1));
        sum += term;
    }
    return sum.numerator();
}

ExactInt motzkin(long n) {
    if (n < 0) throw std::invalid_argument("motzkin: negative index");
    ExactRat term(1), sum(1);
    for (long k = 0; n - 2 * (k + 1) >= 0; ++k) {
        term *= ExactRat((n - 2 * k) * (n - 2 * k - 1), (k + 1) * (k + 2));
        sum += term;
    }
    return sum.numerator();
}

ExactInt trinomial_coeff(long n, long m) {
    if (n < 0) throw std::invalid_argument("trinomial_coeff: negative index");
    if (m < 0) m = -m;  // the expansion is palindromic
    if (m > n) return ExactInt(0);
    ExactRat term(binomial(n, m)), sum = term;  // j = 0 term: n!/(m!(n-m)!)
    for (long j = 0; n - 2 * (j + 1) - m >= 0; ++j) {
        term *= ExactRat((n - 2 * j - m) * (n - 2 * j - m - 1), (j + 1) * (m + j + 1));
        sum += term;
    }
    return sum.numerator();
}

ExactRat m_order_ctc(long n, long m_step, long p) {
    if (n < 0) throw std::invalid_argument("m_order_ctc: negative index");
    if (m_step < 2) throw std::invalid_argument("m_order_ctc: m_step must be >= 2");
    if (p < 0) throw std::invalid_argument("m_order_ctc: p must be >= 0");
    ExactRat term(ExactInt(1), factorial(p));  // k = 0 term: 1/p!
    ExactRat sum = term;
    for (long k = 0; n - m_step * (k + 1) >= 0; ++k) {
        term *= ExactRat(falling_factorial(n - m_step * k, m_step),
                         ExactInt((k + 1)) * ExactInt(k + p + 1));
        sum += term;
    }
    return sum;
}

ExactRat assoc_ctc(long n, long p) { return m_order_ctc(n, 2, p); }

ExactInt generalized_d(long n, long m_step) {
    if (n < 0) throw std::invalid_argument("generalized_d: negative index");
    if (m_step < 2) throw std::invalid_argument("generalized_d: m_step must be >= 2");
    ExactRat term(1), sum(1);
    for (long k = 0; n - m_step * (k + 1) >= 0; ++k) {
        term *= ExactRat(falling_factorial(n - m_step * k, m_step),
                         ExactInt(k + 1) * falling_factorial((m_step - 1) * (k + 1), m_step - 1));
        sum += term;
    }
    return sum.numerator();
}

ExactRat seq_value(const SeqSpec& spec, long n) {
    switch (spec.family()) {
        case SeqFamily::CTC: return ExactRat(ctc(n));
        case SeqFamily::MOTZKIN: return ExactRat(motzkin(n));
        case SeqFamily::TRINOMIAL_COL: return ExactRat(trinomial_coeff(n, spec.column()));
        case SeqFamily::ASSOC_CTC: return assoc_ctc(n, spec.p());
        case SeqFamily::M_ORDER_CTC: return m_order_ctc(n, spec.m_step(), spec.p());
        case SeqFamily::GENERALIZED_D: return ExactRat(generalized_d(n, spec.m_step()));
    }
    throw std::logic_error("seq_value: bad enum");
}

// ---- streaming ----
//
// All families are D-finite: the exponential generating function has the
// shape F(t) = exp(t) h(t) with h a hypergeometric-style power series in
// t^step (possibly shifted). Writing R for the theta-polynomial with
// R(theta) h = t^step h, the normalized coefficients f_n = a_n / n! obey
//   sum_k A_k(n) f_{n-k} = f_{n-step},   A_0(n) = R(n),
// where A_k(n) = (-1)^k sum_{i>=k} c_i binom(i, i-k) (n-k)...(n-i+1) and
// c_i expands R through Stirling numbers: theta^l = sum_i S(l,i) t^i D^i.
// For the plain CTC this reduces to the classical three-term recurrence
// (n+1) c(n+1) = (2n+1) c(n) + 3n c(n-1), which is used directly below.

namespace {

struct EgfRecurrence {
    std::vector<ExactRat> theta_poly;  // R, index = power of theta
    long step;                         // exponent step of h
    long seed_until;                   // take direct sums for n < seed_until
};

std::vector<std::vector<ExactInt>> stirling2_table(long K) {
    std::vector<std::vector<ExactInt>> S(static_cast<std::size_t>(K) + 1,
                                         std::vector<ExactInt>(static_cast<std::size_t>(K) + 1,
                                                               ExactInt(0)));
    S[0][0] = ExactInt(1);
    for (long l = 1; l <= K; ++l)
        for (long i = 1; i <= l; ++i)
            S[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] =
                S[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i - 1)] +
                ExactInt(i) * S[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i)];
    return S;
}

std::vector<ExactRat> stream_egf(const EgfRecurrence& rec,
                                 const std::function<ExactRat(long)>& direct, long limit) {
    const long K = static_cast<long>(rec.theta_poly.size()) - 1;
    const auto S = stirling2_table(K);
    std::vector<ExactRat> c(static_cast<std::size_t>(K) + 1, ExactRat(0));
    for (long i = 0; i <= K; ++i)
        for (long l = i; l <= K; ++l)
            c[static_cast<std::size_t>(i)] +=
                rec.theta_poly[static_cast<std::size_t>(l)] *
                ExactRat(S[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)]);

    const long n0 = std::max({rec.seed_until, K, rec.step});
    std::vector<ExactRat> f;
    f.reserve(static_cast<std::size_t>(limit));
    for (long n = 0; n < std::min(n0, limit); ++n)
        f.push_back(direct(n) / ExactRat(factorial(n)));
    for (long n = n0; n < limit; ++n) {
        ExactRat acc = f[static_cast<std::size_t>(n - rec.step)];
        for (long k = 1; k <= K; ++k) {
            ExactRat A(0);
            for (long i = k; i <= K; ++i) {
                if (c[static_cast<std::size_t>(i)].is_zero()) continue;
                A += c[static_cast<std::size_t>(i)] * ExactRat(binomial(i, i - k)) *
                     ExactRat(falling_factorial(n - k, i - k));
            }
            if (k % 2 != 0) A = -A;
            acc -= A * f[static_cast<std::size_t>(n - k)];
        }
        ExactRat lead(0);  // A_0(n) = R(n)
        for (long i = 0; i <= K; ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            lead += c[static_cast<std::size_t>(i)] * ExactRat(falling_factorial(n, i));
        }
        if (lead.is_zero()) throw std::logic_error("stream: vanishing leading coefficient");
        f.push_back(acc / lead);
    }

    std::vector<ExactRat> a;
    a.reserve(static_cast<std::size_t>(limit));
    for (long n = 0; n < limit; ++n)
        a.push_back(f[static_cast<std::size_t>(n)] * ExactRat(factorial(n)));
    return a;
}

// h = sum_k t^(mk) / (k! (k+p)!):  R(theta) = (theta/m)(theta/m + p)
EgfRecurrence m_order_recurrence(long m, long p) {
    ExactRat inv_m2(ExactInt(1), ExactInt(m) * ExactInt(m));
    return {{ExactRat(0), ExactRat(p, m), inv_m2}, m, m};
}

// h = sum_r t^(c+2r) / (r! (r+c)!):  R(theta) = (theta^2 - c^2)/4
EgfRecurrence trinomial_col_recurrence(long c) {
    ExactRat neg_c2(ExactInt(-1) * ExactInt(c) * ExactInt(c), ExactInt(4));
    return {{neg_c2, ExactRat(0), ExactRat(1, 4)}, 2, std::max<long>(2, c + 1)};
}

// h = sum_k t^(mk) / (k! ((m-1)k)!):
// R(theta) = (theta/m) prod_{i=1..m-1} ((m-1)(theta-m)/m + i)
EgfRecurrence generalized_d_recurrence(long m) {
    DensePoly r({ExactRat(0), ExactRat(1, m)});
    for (long i = 1; i <= m - 1; ++i) {
        DensePoly factor({ExactRat(i - (m - 1)), ExactRat(m - 1, m)});
        r = r * factor;
    }
    return {r.coeffs(), m, m};
}

std::vector<ExactRat> stream_ctc(long limit) {
    std::vector<ExactRat> a;
    a.reserve(static_cast<std::size_t>(limit));
    for (long n = 0; n < std::min<long>(2, limit); ++n) a.push_back(ExactRat(1));
    for (long n = 1; n + 1 < limit; ++n)
        a.push_back((ExactRat(2 * n + 1) * a[static_cast<std::size_t>(n)] +
                     ExactRat(3 * n) * a[static_cast<std::size_t>(n - 1)]) /
                    ExactRat(n + 1));
    return a;
}

}  // namespace

std::vector<ExactRat> stream(const SeqSpec& spec, long limit) {
    if (limit < 1) throw std::invalid_argument("stream: limit must be >= 1");
    switch (spec.family()) {
        case SeqFamily::CTC:
            return stream_ctc(limit);
        case SeqFamily::MOTZKIN: {
            // m(n) = (c(n+2) - c(n+1)) / (2(n+1)) over a streamed CTC run
            std::vector<ExactRat> c = stream_ctc(limit + 2);
            std::vector<ExactRat> a;
            a.reserve(static_cast<std::size_t>(limit));
            for (long n = 0; n < limit; ++n)
                a.push_back((c[static_cast<std::size_t>(n + 2)] -
                             c[static_cast<std::size_t>(n + 1)]) /
                            ExactRat(2 * (n + 1)));
            return a;
        }
        case SeqFamily::ASSOC_CTC:
            return stream_egf(m_order_recurrence(2, spec.p()),
                              [&](long n) { return assoc_ctc(n, spec.p()); }, limit);
        case SeqFamily::M_ORDER_CTC:
            return stream_egf(m_order_recurrence(spec.m_step(), spec.p()),
                              [&](long n) { return m_order_ctc(n, spec.m_step(), spec.p()); },
                              limit);
        case SeqFamily::TRINOMIAL_COL: {
            long c = spec.column() < 0 ? -spec.column() : spec.column();
            return stream_egf(trinomial_col_recurrence(c),
                              [&](long n) { return ExactRat(trinomial_coeff(n, c)); }, limit);
        }
        case SeqFamily::GENERALIZED_D:
            return stream_egf(generalized_d_recurrence(spec.m_step()),
                              [&](long n) { return ExactRat(generalized_d(n, spec.m_step())); },
                              limit);
    }
    throw std::logic_error("stream: bad enum");
}

ExactInt motzkin_path_oracle(long n, long bound) {
    if (n < 0) throw std::invalid_argument("motzkin_path_oracle: negative index");
    if (n > bound)
        throw std::invalid_argument("motzkin_path_oracle: index " + std::to_string(n) +
                                    " beyond oracle bound " + std::to_string(bound));
    std::vector<ExactInt> dp(static_cast<std::size_t>(n) + 2, ExactInt(0));
    dp[0] = ExactInt(1);
    for (long step = 0; step < n; ++step) {
        std::vector<ExactInt> next(dp.size(), ExactInt(0));
        for (std::size_t h = 0; h < dp.size() - 1; ++h) {
            if (dp[h].is_zero()) continue;
            next[h] += dp[h];                    // level step
            next[h + 1] += dp[h];                // up step
            if (h > 0) next[h - 1] += dp[h];     // down step
        }
        dp = std::move(next);
    }
    return dp[0];
}

// ---- identity checker ----

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::EQ2A: return "EQ2A";
        case Identity::EQ13: return "EQ13";
        case Identity::EQ24: return "EQ24";
        case Identity::EQ27: return "EQ27";
        case Identity::EQ32: return "EQ32";
        case Identity::EQ34: return "EQ34";
        case Identity::EQ39: return "EQ39";
        case Identity::EQ41: return "EQ41";
        case Identity::EQ43_CORRECTED: return "EQ43_CORRECTED";
        case Identity::EQ43_PRINTED: return "EQ43_PRINTED";
    }
    throw std::logic_error("identity_name: bad enum");
}

std::optional<Identity> identity_from_name(std::string_view name) {
    for (Identity id : {Identity::EQ2A, Identity::EQ13, Identity::EQ24, Identity::EQ27,
                        Identity::EQ32, Identity::EQ34, Identity::EQ39, Identity::EQ41,
                        Identity::EQ43_CORRECTED, Identity::EQ43_PRINTED})
        if (identity_name(id) == name) return id;
    return std::nullopt;
}

bool identity_uses_p(Identity id) {
    return id == Identity::EQ41 || id == Identity::EQ43_CORRECTED ||
           id == Identity::EQ43_PRINTED;
}

bool identity_uses_m_step(Identity id) {
    return id == Identity::EQ43_CORRECTED || id == Identity::EQ43_PRINTED;
}

namespace {

long identity_min_n(Identity id, const IdentityParams& params) {
    switch (id) {
        case Identity::EQ24:
        case Identity::EQ34:
            return 1;
        case Identity::EQ43_CORRECTED:
        case Identity::EQ43_PRINTED:
            return params.m_step - 1;
        default:
            return 0;
    }
}

std::pair<ExactRat, ExactRat> eval_identity(Identity id, const IdentityParams& params, long n) {
    switch (id) {
        case Identity::EQ2A:
            return {ExactRat(motzkin(n)), ExactRat(trinomial_coeff(n + 1, 1), ExactInt(n + 1))};
        case Identity::EQ13:
            return {ExactRat(ctc(n)), hybrid_pi(n, ExactRat(1), ExactRat(1))};
        case Identity::EQ24:
            return {ExactRat(n + 1) * ExactRat(ctc(n + 1)),
                    ExactRat(2 * n + 1) * ExactRat(ctc(n)) + ExactRat(3 * n) * ExactRat(ctc(n - 1))};
        case Identity::EQ27:
            return {ExactRat(motzkin(n)), assoc_ctc(n, 1)};
        case Identity::EQ32:
            return {ExactRat(motzkin(n)), hybrid_pi_assoc(n, 1, ExactRat(1), ExactRat(1))};
        case Identity::EQ34:
            return {ExactRat(ctc(n + 1)),
                    ExactRat(ctc(n)) + ExactRat(2 * n) * ExactRat(motzkin(n - 1))};
        case Identity::EQ39:
            return {ExactRat(motzkin(n)),
                    (ExactRat(ctc(n + 2)) - ExactRat(ctc(n + 1))) / ExactRat(2 * (n + 1))};
        case Identity::EQ41:
            return {assoc_ctc(n, params.p + 1),
                    (assoc_ctc(n + 2, params.p) - assoc_ctc(n + 1, params.p)) /
                        ExactRat(2 * (n + 1))};
        case Identity::EQ43_CORRECTED: {
            const long m = params.m_step;
            return {m_order_ctc(n + 1, m, params.p),
                    m_order_ctc(n, m, params.p) +
                        ExactRat(m) * ExactRat(falling_factorial(n, m - 1)) *
                            m_order_ctc(n - m + 1, m, params.p + 1)};
        }
        case Identity::EQ43_PRINTED: {
            const long m = params.m_step;
            return {m_order_ctc(n + 1, m, params.p),
                    m_order_ctc(n, m, params.p) +
                        ExactRat(m) * ExactRat(falling_factorial(n, m - 1)) *
                            m_order_ctc(n - m + 1, m, params.p)};
        }
    }
    throw std::logic_error("eval_identity: bad enum");
}

}  // namespace

IdentityReport check_identity(Identity id, long lo, long hi, IdentityParams params,
                              unsigned threads) {
    if (identity_uses_m_step(id) && params.m_step < 2)
        throw std::invalid_argument("check_identity: m_step must be >= 2");
    if (identity_uses_p(id) && params.p < 0)
        throw std::invalid_argument("check_identity: p must be >= 0");

    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.identity = id;
    rep.params = params;
    rep.lo = lo;
    rep.hi = hi;
    rep.evaluated_lo = std::max(lo, identity_min_n(id, params));
    rep.evaluated_hi = hi;

    const long start = rep.evaluated_lo;
    if (start <= hi) {
        auto eval_range = [&](long a, long b, std::vector<IdentityFailure>& out) {
            for (long n = a; n <= b; ++n) {
                auto [lhs, rhs] = eval_identity(id, params, n);
                if (!(lhs == rhs)) out.push_back({n, std::move(lhs), std::move(rhs)});
            }
        };

        const long total = hi - start + 1;
        const unsigned workers =
            std::min<unsigned>(std::max(1u, threads), static_cast<unsigned>(total));
        if (workers == 1) {
            eval_range(start, hi, rep.failures);
        } else {
            std::vector<std::vector<IdentityFailure>> parts(workers);
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            long chunk = total / workers, rem = total % workers, a = start;
            for (unsigned w = 0; w < workers; ++w) {
                long len = chunk + (w < static_cast<unsigned>(rem) ? 1 : 0);
                long b = a + len - 1;
                pool.emplace_back([&, w, a, b]() {
                    try {
                        eval_range(a, b, parts[w]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
                a = b + 1;
            }
            for (auto& t : pool) t.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
            for (auto& part : parts)
                for (auto& f : part) rep.failures.push_back(std::move(f));
        }
    }

    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

// ---- reference table ----

std::vector<Table1Row> table1_expected() {
    static const long c0[] = {1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953};
    static const long c1[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
    static const long sc2[] = {3, 3, 5, 9, 18, 38, 84, 192, 451, 1083, 2649};
    std::vector<Table1Row> rows;
    rows.reserve(11);
    for (long n = 0; n <= 10; ++n)
        rows.push_back({n, ExactInt(c0[n]), ExactInt(c1[n]), ExactInt(sc2[n])});
    return rows;
}

std::vector<Table1Row> table1_computed() {
    std::vector<Table1Row> rows;
    rows.reserve(11);
    for (long n = 0; n <= 10; ++n) {
        ExactRat six_c2 = ExactRat(6) * assoc_ctc(n, 2);
        if (!six_c2.is_integer())
            throw std::logic_error("table1_computed: 6*c^2 row is not integral");
        rows.push_back({n, ctc(n), motzkin(n), six_c2.numerator()});
    }
    return rows;
}

}  // namespace trinom
