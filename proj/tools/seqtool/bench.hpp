/**
 * @file bench.hpp
 * @brief Method-comparison harness behind `seqtool bench`.
 *
 * Every method computes the same sequence prefix; values are cross-checked
 * for exact agreement before any timing is reported. Disagreement is a
 * correctness error and no timings are printed.
 */
#ifndef SEQTOOL_BENCH_HPP
#define SEQTOOL_BENCH_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "trinom/exact.hpp"
#include "trinom/sequences.hpp"

namespace seqtool {

struct BenchMethod {
    std::string name;
    /// Produces terms 0..n_max of the sequence.
    std::function<std::vector<trinom::ExactRat>(long n_max)> run;
};

/// Builds the named method ("direct_sum", "recurrence", "oracle") for `spec`;
/// throws std::invalid_argument for unknown names or families without an
/// oracle, and when n_max exceeds `oracle_bound` for the oracle method.
BenchMethod make_method(const trinom::SeqSpec& spec, const std::string& name, long n_max,
                        long oracle_bound);

/// Runs all methods, verifies exact agreement, then prints a timing table
/// (CSV with --csv). Returns 0 on success, 1 when methods disagree.
int run_bench(const trinom::SeqSpec& spec, long n_max, const std::vector<BenchMethod>& methods,
              bool csv, std::ostream& out, std::ostream& err);

}  // namespace seqtool

#endif  // SEQTOOL_BENCH_HPP
