#include "seqtool/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "trinom/poly.hpp"

namespace seqtool {

using trinom::ExactRat;
using trinom::SeqFamily;
using trinom::SeqSpec;

BenchMethod make_method(const SeqSpec& spec, const std::string& name, long n_max,
                        long oracle_bound) {
    if (name == "direct_sum") {
        return {name, [spec](long nm) {
                    std::vector<ExactRat> v;
                    v.reserve(static_cast<std::size_t>(nm) + 1);
                    for (long n = 0; n <= nm; ++n) v.push_back(trinom::seq_value(spec, n));
                    return v;
                }};
    }
    if (name == "recurrence") {
        return {name, [spec](long nm) { return trinom::stream(spec, nm + 1); }};
    }
    if (name == "oracle") {
        if (n_max > oracle_bound)
            throw std::invalid_argument("bench: n_max " + std::to_string(n_max) +
                                        " exceeds oracle bound " + std::to_string(oracle_bound));
        switch (spec.family()) {
            case SeqFamily::CTC:
                return {name, [](long nm) {
                            std::vector<ExactRat> v;
                            for (long n = 0; n <= nm; ++n)
                                v.push_back(ExactRat(trinom::central_coeff(n, 2)));
                            return v;
                        }};
            case SeqFamily::MOTZKIN:
                return {name, [oracle_bound](long nm) {
                            std::vector<ExactRat> v;
                            for (long n = 0; n <= nm; ++n)
                                v.push_back(ExactRat(trinom::motzkin_path_oracle(n, oracle_bound)));
                            return v;
                        }};
            case SeqFamily::TRINOMIAL_COL:
                return {name, [spec](long nm) {
                            std::vector<ExactRat> v;
                            for (long n = 0; n <= nm; ++n)
                                v.push_back(ExactRat(
                                    trinom::laurent_trinomial_coeff(n, spec.column())));
                            return v;
                        }};
            case SeqFamily::GENERALIZED_D:
                return {name, [spec](long nm) {
                            std::vector<ExactRat> v;
                            for (long n = 0; n <= nm; ++n)
                                v.push_back(ExactRat(trinom::central_coeff(n, spec.m_step())));
                            return v;
                        }};
            default:
                throw std::invalid_argument("bench: no oracle method for family " +
                                            trinom::family_name(spec.family()));
        }
    }
    throw std::invalid_argument("bench: unknown method '" + name + "'");
}

int run_bench(const SeqSpec& spec, long n_max, const std::vector<BenchMethod>& methods, bool csv,
              std::ostream& out, std::ostream& err) {
    if (methods.empty()) throw std::invalid_argument("bench: empty method list");

    struct Result {
        const BenchMethod* method;
        std::vector<ExactRat> values;
        double wall_ms;
    };
    std::vector<Result> results;
    results.reserve(methods.size());
    for (const auto& m : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<ExactRat> values = m.run(n_max);
        const auto t1 = std::chrono::steady_clock::now();
        results.push_back(
            {&m, std::move(values),
             std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
                 .count()});
    }

    // Cross-check values before any timing leaves the harness.
    const auto& ref = results.front();
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto& r = results[i];
        if (r.values.size() != ref.values.size()) {
            err << "bench: method '" << r.method->name << "' produced "
                << r.values.size() << " values, expected " << ref.values.size() << "\n";
            return 1;
        }
        for (std::size_t n = 0; n < ref.values.size(); ++n) {
            if (!(r.values[n] == ref.values[n])) {
                err << "bench: methods disagree at n=" << n << ": '" << ref.method->name
                    << "' gives " << ref.values[n].str() << ", '" << r.method->name << "' gives "
                    << r.values[n].str() << "; refusing to report timings\n";
                return 1;
            }
        }
    }

    if (csv) {
        out << "family,n_max,method,wall_ms\n";
        for (const auto& r : results)
            out << spec.describe() << "," << n_max << "," << r.method->name << "," << r.wall_ms
                << "\n";
    } else {
        out << "sequence " << spec.describe() << ", terms 0.." << n_max
            << " (all methods agree on all values)\n";
        for (const auto& r : results)
            out << "  " << r.method->name << ": " << r.wall_ms << " ms\n";
    }
    return 0;
}

}  // namespace seqtool
