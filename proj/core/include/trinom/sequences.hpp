/**
 * @file sequences.hpp
 * @brief The integer/rational sequence families, their streaming recurrences,
 *        and the identity checker.
 *
 * Every family has a direct-summation evaluator (the defining formula, with
 * incremental term ratios so no oversized factorials are formed) and a
 * streaming evaluator producing the first N terms in O(N) big-number
 * operations. The two must agree everywhere; tests enforce it.
 */
#ifndef TRINOM_SEQUENCES_HPP
#define TRINOM_SEQUENCES_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/exact.hpp"

namespace trinom {

// ---- the sequence families ----

enum class SeqFamily { CTC, MOTZKIN, TRINOMIAL_COL, ASSOC_CTC, M_ORDER_CTC, GENERALIZED_D };

std::string family_name(SeqFamily f);
std::optional<SeqFamily> family_from_name(std::string_view name);

/// Selects one sequence; construct through the factories so that only the
/// parameters meaningful for the family can be set.
class SeqSpec {
public:
    static SeqSpec ctc() { return SeqSpec(SeqFamily::CTC); }
    static SeqSpec motzkin() { return SeqSpec(SeqFamily::MOTZKIN); }
    static SeqSpec trinomial_col(long column);
    static SeqSpec assoc_ctc(long p);
    static SeqSpec m_order_ctc(long m_step, long p);
    static SeqSpec generalized_d(long m_step);

    SeqFamily family() const { return family_; }
    long p() const { return p_; }
    long m_step() const { return m_; }
    long column() const { return column_; }

    /// True when every term of the sequence is an integer.
    bool integer_valued() const;
    std::string describe() const;

private:
    explicit SeqSpec(SeqFamily f) : family_(f) {}
    SeqFamily family_;
    long p_ = 0;
    long m_ = 2;
    long column_ = 0;
};

// ---- direct-summation evaluators ----

/// Central trinomial coefficient: sum_k n! / ((k!)^2 (n-2k)!).
ExactInt ctc(long n);

/// Motzkin number: sum_k n! / (k! (k+1)! (n-2k)!).
ExactInt motzkin(long n);

/// Trinomial coefficient: sum_j n! / (j! (m+j)! (n-2j-m)!), zero for |m| > n.
ExactInt trinomial_coeff(long n, long m);

/// p-associated CTC: n! sum_k 1 / ((n-2k)! k! (k+p)!); integer for p in {0,1}.
ExactRat assoc_ctc(long n, long p);

/// Order-m p-associated CTC: n! sum_k 1 / ((n-mk)! k! (k+p)!).
ExactRat m_order_ctc(long n, long m_step, long p);

/// n! sum_k 1 / (k! ((m-1)k)! (n-mk)!); equals central_coeff(n, m_step).
ExactInt generalized_d(long n, long m_step);

/// Direct-sum value of the sequence selected by `spec` at index n.
ExactRat seq_value(const SeqSpec& spec, long n);

/// First `limit` terms via the family's recurrence (O(limit) big-number ops).
std::vector<ExactRat> stream(const SeqSpec& spec, long limit);

/// Counts lattice paths (0,0) -> (n,0) with steps +1/0/-1 in height, never
/// below the axis, by dynamic programming; rejects n beyond `bound`.
ExactInt motzkin_path_oracle(long n, long bound = 30);

// ---- identity checker ----

// Identity catalogue. Writing c[p](n) for the p-associated CTC, mc[m,p](n)
// for the order-m one, m(n) for Motzkin and c(n) for the CTC:
//   EQ2A           (n+1) m(n) = trinomial_coeff(n+1, 1)
//   EQ13           c(n) = Pi_n(1,1)
//   EQ24           (n+1) c(n+1) = (2n+1) c(n) + 3n c(n-1)
//   EQ27           m(n) = c[1](n)
//   EQ32           m(n) = Pi^1_n(1,1)
//   EQ34           c(n+1) = c(n) + 2n m(n-1)
//   EQ39           m(n) = (c(n+2) - c(n+1)) / (2(n+1))
//   EQ41           c[p+1](n) = (c[p](n+2) - c[p](n+1)) / (2(n+1))
//   EQ43_CORRECTED mc[m,p](n+1) = mc[m,p](n) + m n!/(n-m+1)! mc[m,p+1](n-m+1)
//   EQ43_PRINTED   same with mc[m,p](n-m+1) on the right; fails and is kept
//                  as a documented negative check
enum class Identity {
    EQ2A,
    EQ13,
    EQ24,
    EQ27,
    EQ32,
    EQ34,
    EQ39,
    EQ41,
    EQ43_CORRECTED,
    EQ43_PRINTED,
};

std::string identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);
bool identity_uses_p(Identity id);
bool identity_uses_m_step(Identity id);

struct IdentityParams {
    long p = 0;
    long m_step = 2;
};

struct IdentityFailure {
    long n;
    ExactRat lhs;
    ExactRat rhs;
};

struct IdentityReport {
    Identity identity;
    IdentityParams params;
    long lo = 0;  // requested range, inclusive
    long hi = -1;
    long evaluated_lo = 0;  // after clamping to the identity's valid subrange
    long evaluated_hi = -1;
    std::vector<IdentityFailure> failures;  // ordered by index
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

/// Evaluates both sides of `id` exactly for every n in [lo, hi] (clamped to
/// the identity's valid subrange; an empty range passes vacuously). With
/// threads > 1 the range is split across workers; failures are still
/// reported in index order.
IdentityReport check_identity(Identity id, long lo, long hi, IdentityParams params = {},
                              unsigned threads = 1);

// ---- reference table of the first associated-CTC values ----

struct Table1Row {
    long n;
    ExactInt c0;       // c[0](n)
    ExactInt c1;       // c[1](n)
    ExactInt six_c2;   // 6 c[2](n), which is integral on these rows
};

/// The embedded reference constants for n = 0..10.
std::vector<Table1Row> table1_expected();

/// The same table computed from the sequence definitions.
std::vector<Table1Row> table1_computed();

}  // namespace trinom

#endif  // TRINOM_SEQUENCES_HPP
