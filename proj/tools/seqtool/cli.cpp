#include "seqtool/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "seqtool/bench.hpp"
#include "trinom/bfile.hpp"
#include "trinom/genfun.hpp"
#include "trinom/hybrid.hpp"
#include "trinom/sequences.hpp"
#include "trinom/series.hpp"

namespace seqtool {

namespace {

using trinom::BFileEntry;
using trinom::BFileError;
using trinom::ExactRat;
using trinom::Identity;
using trinom::IdentityParams;
using trinom::SeqFamily;
using trinom::SeqSpec;
using trinom::TruncatedSeries;

/// Command misuse; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::size_t order = 200;  // truncation order for series-backed checks
    unsigned jobs = 1;        // identity-checking worker threads
    long oracle_bound = 30;   // index cap for oracle-backed methods
};

SeqSpec build_spec(const std::string& family, std::optional<long> p, std::optional<long> m_step,
                   std::optional<long> column) {
    auto fam = trinom::family_from_name(family);
    if (!fam) throw UsageError("unknown family '" + family + "'");
    auto reject = [&](const char* flag, bool present) {
        if (present)
            throw UsageError(std::string(flag) + " is not applicable to family " + family);
    };
    switch (*fam) {
        case SeqFamily::CTC:
            reject("--p", p.has_value());
            reject("--m-step", m_step.has_value());
            reject("--column", column.has_value());
            return SeqSpec::ctc();
        case SeqFamily::MOTZKIN:
            reject("--p", p.has_value());
            reject("--m-step", m_step.has_value());
            reject("--column", column.has_value());
            return SeqSpec::motzkin();
        case SeqFamily::TRINOMIAL_COL:
            reject("--p", p.has_value());
            reject("--m-step", m_step.has_value());
            return SeqSpec::trinomial_col(column.value_or(0));
        case SeqFamily::ASSOC_CTC:
            reject("--m-step", m_step.has_value());
            reject("--column", column.has_value());
            return SeqSpec::assoc_ctc(p.value_or(0));
        case SeqFamily::M_ORDER_CTC:
            reject("--column", column.has_value());
            return SeqSpec::m_order_ctc(m_step.value_or(2), p.value_or(0));
        case SeqFamily::GENERALIZED_D:
            reject("--p", p.has_value());
            reject("--column", column.has_value());
            return SeqSpec::generalized_d(m_step.value_or(2));
    }
    throw std::logic_error("build_spec: bad enum");
}

// ---- gen ----

int cmd_gen(const SeqSpec& spec, long from, long to, const std::string& format,
            std::ostream& out) {
    if (from < 0) throw UsageError("gen: --from must be >= 0");
    if (to < from) throw UsageError("gen: --to must be >= --from");
    const std::vector<ExactRat> terms = trinom::stream(spec, to + 1);
    if (format == "plain") {
        for (long n = from; n <= to; ++n) out << terms[static_cast<std::size_t>(n)].str() << "\n";
    } else if (format == "csv") {
        out << "index,value\n";
        for (long n = from; n <= to; ++n)
            out << n << "," << terms[static_cast<std::size_t>(n)].str() << "\n";
    } else if (format == "bfile") {
        std::vector<BFileEntry> entries;
        entries.reserve(static_cast<std::size_t>(to - from + 1));
        for (long n = from; n <= to; ++n) {
            const ExactRat& v = terms[static_cast<std::size_t>(n)];
            if (!v.is_integer())
                throw UsageError("gen: bfile format holds integers only, but " + spec.describe() +
                                 " at index " + std::to_string(n) + " is " + v.str());
            entries.push_back({n, v.numerator()});
        }
        out << trinom::render_bfile(entries);
    } else {
        throw UsageError("gen: unknown format '" + format + "'");
    }
    return 0;
}

// ---- table1 ----

int cmd_table1(std::ostream& out, std::ostream& err) {
    const auto expected = trinom::table1_expected();
    const auto computed = trinom::table1_computed();
    out << std::right << std::setw(3) << "n" << std::setw(10) << "c^0" << std::setw(10) << "c^1"
        << std::setw(10) << "6*c^2" << "\n";
    long mismatches = 0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const auto& c = computed[i];
        const auto& e = expected[i];
        out << std::setw(3) << c.n << std::setw(10) << c.c0.str() << std::setw(10) << c.c1.str()
            << std::setw(10) << c.six_c2.str() << "\n";
        auto cell = [&](const char* name, const trinom::ExactInt& got,
                        const trinom::ExactInt& want) {
            if (!(got == want)) {
                err << "table1: mismatch at n=" << c.n << ", column " << name << ": computed "
                    << got.str() << ", expected " << want.str() << "\n";
                ++mismatches;
            }
        };
        cell("c^0", c.c0, e.c0);
        cell("c^1", c.c1, e.c1);
        cell("6*c^2", c.six_c2, e.six_c2);
    }
    if (mismatches != 0) {
        err << "table1: " << mismatches << " of 33 values differ\n";
        return 1;
    }
    out << "table1: 33/33 values match\n";
    return 0;
}

// ---- check ----

void print_check_line(std::ostream& out, const std::string& label, long lo, long hi, bool pass,
                      const std::string& detail) {
    std::ostringstream range;
    range << "n=" << lo << ".." << hi;
    out << std::left << std::setw(30) << label << std::setw(16) << range.str();
    if (pass)
        out << "pass\n";
    else
        out << "FAIL " << detail << "\n";
}

bool run_core_identity(Identity id, const IdentityParams& params, long n_max, unsigned jobs,
                       std::ostream& out) {
    const trinom::IdentityReport rep = trinom::check_identity(id, 0, n_max, params, jobs);
    std::string label = trinom::identity_name(id);
    if (trinom::identity_uses_m_step(id)) label += " m=" + std::to_string(params.m_step);
    if (trinom::identity_uses_p(id)) label += " p=" + std::to_string(params.p);
    std::string detail;
    if (!rep.passed()) {
        const auto& f = rep.failures.front();
        detail = "at n=" + std::to_string(f.n) + " (" + f.lhs.str() + " != " + f.rhs.str() + "; " +
                 std::to_string(rep.failures.size()) + " failing)";
    }
    print_check_line(out, label, rep.evaluated_lo, rep.evaluated_hi, rep.passed(), detail);
    return rep.passed();
}

// The generating-function agreement checks compare series coefficients
// against the closed-form evaluators up to min(n_max, order-1).

std::optional<std::string> gf_fail_ctc_egf(long hi, std::size_t order) {
    const TruncatedSeries s = trinom::ctc_egf(order);
    for (long n = 0; n <= hi; ++n) {
        const ExactRat v = trinom::series_coeff(s, static_cast<std::size_t>(n)) *
                           ExactRat(trinom::factorial(n));
        if (!(v == ExactRat(trinom::ctc(n))))
            return "at n=" + std::to_string(n) + " (" + v.str() + " != " +
                   trinom::ctc(n).str() + ")";
    }
    return std::nullopt;
}

std::optional<std::string> gf_fail_motzkin_egf(long hi, std::size_t order) {
    // exp(t) I_1(2t) / t, built literally: product at order+1, then shifted.
    const TruncatedSeries expt = trinom::series_exp(
        TruncatedSeries::from_coeffs({ExactRat(0), ExactRat(1)}, order + 1));
    const TruncatedSeries prod = trinom::series_mul(expt, trinom::bessel_i_series(1, order + 1));
    const TruncatedSeries s = trinom::series_shift_down(prod);
    for (long n = 0; n <= hi; ++n) {
        const ExactRat v = trinom::series_coeff(s, static_cast<std::size_t>(n)) *
                           ExactRat(trinom::factorial(n));
        if (!(v == ExactRat(trinom::motzkin(n))))
            return "at n=" + std::to_string(n) + " (" + v.str() + " != " +
                   trinom::motzkin(n).str() + ")";
    }
    return std::nullopt;
}

std::optional<std::string> gf_fail_pi_ogf(long hi, std::size_t order) {
    const std::vector<std::pair<ExactRat, ExactRat>> pairs = {
        {ExactRat(1), ExactRat(1)},       {ExactRat(2), ExactRat(3)},
        {ExactRat(-1), ExactRat(2)},      {ExactRat(3, 2), ExactRat(1, 2)},
        {ExactRat(0), ExactRat(5)},
    };
    for (const auto& [x, y] : pairs) {
        const TruncatedSeries s = trinom::pi_ogf(x, y, order);
        for (long n = 0; n <= hi; ++n) {
            const ExactRat v = trinom::series_coeff(s, static_cast<std::size_t>(n));
            const ExactRat want = trinom::hybrid_pi(n, x, y);
            if (!(v == want))
                return "at (x,y)=(" + x.str() + "," + y.str() + "), n=" + std::to_string(n) +
                       " (" + v.str() + " != " + want.str() + ")";
        }
    }
    return std::nullopt;
}

std::optional<std::string> gf_fail_legendre_ogf(long hi, std::size_t order) {
    const std::vector<ExactRat> xs = {ExactRat(1), ExactRat(1, 2), ExactRat(-2), ExactRat(3, 5),
                                      ExactRat(7)};
    for (const auto& x : xs) {
        const TruncatedSeries s = trinom::legendre_ogf(x, order);
        for (long n = 0; n <= hi; ++n) {
            const ExactRat v = trinom::series_coeff(s, static_cast<std::size_t>(n));
            const ExactRat want = trinom::legendre(n, x);
            if (!(v == want))
                return "at x=" + x.str() + ", n=" + std::to_string(n) + " (" + v.str() +
                       " != " + want.str() + ")";
        }
    }
    return std::nullopt;
}

const std::vector<std::string>& gf_check_names() {
    static const std::vector<std::string> names = {"GF_CTC_EGF", "GF_MOTZKIN_EGF", "GF_PI_OGF",
                                                   "GF_LEGENDRE_OGF"};
    return names;
}

bool run_gf_check(const std::string& name, long n_max, std::size_t order, std::ostream& out) {
    const long hi = std::min<long>(n_max, static_cast<long>(order) - 1);
    std::optional<std::string> fail;
    if (name == "GF_CTC_EGF")
        fail = gf_fail_ctc_egf(hi, order);
    else if (name == "GF_MOTZKIN_EGF")
        fail = gf_fail_motzkin_egf(hi, order);
    else if (name == "GF_PI_OGF")
        fail = gf_fail_pi_ogf(hi, order);
    else if (name == "GF_LEGENDRE_OGF")
        fail = gf_fail_legendre_ogf(hi, order);
    else
        throw std::logic_error("run_gf_check: bad name");
    print_check_line(out, name, 0, hi, !fail.has_value(), fail.value_or(""));
    return !fail.has_value();
}

struct CheckRun {
    bool is_gf = false;
    Identity id = Identity::EQ24;
    IdentityParams params;
    std::string gf_name;
};

std::vector<CheckRun> expand_suite(const std::vector<std::string>& tokens,
                                   std::optional<long> p_override,
                                   std::optional<long> m_override) {
    auto core_runs = [&](Identity id) {
        std::vector<CheckRun> runs;
        std::vector<long> ps{0}, ms{2};
        if (trinom::identity_uses_p(id))
            ps = p_override ? std::vector<long>{*p_override}
                            : (trinom::identity_uses_m_step(id) ? std::vector<long>{0, 1, 2}
                                                                : std::vector<long>{0, 1, 2, 3});
        if (trinom::identity_uses_m_step(id))
            ms = m_override ? std::vector<long>{*m_override} : std::vector<long>{2, 3, 4, 5};
        for (long m : ms)
            for (long p : ps) runs.push_back({false, id, {p, m}, ""});
        return runs;
    };

    std::vector<CheckRun> runs;
    for (const auto& token : tokens) {
        if (token == "all") {
            for (Identity id : {Identity::EQ2A, Identity::EQ13, Identity::EQ24, Identity::EQ27,
                                Identity::EQ32, Identity::EQ34, Identity::EQ39, Identity::EQ41,
                                Identity::EQ43_CORRECTED}) {
                auto sub = core_runs(id);
                runs.insert(runs.end(), sub.begin(), sub.end());
            }
            for (const auto& gf : gf_check_names()) runs.push_back({true, Identity::EQ24, {}, gf});
            continue;
        }
        if (auto id = trinom::identity_from_name(token)) {
            auto sub = core_runs(*id);
            runs.insert(runs.end(), sub.begin(), sub.end());
            continue;
        }
        const auto& gfs = gf_check_names();
        if (std::find(gfs.begin(), gfs.end(), token) != gfs.end()) {
            runs.push_back({true, Identity::EQ24, {}, token});
            continue;
        }
        throw UsageError("check: unknown identity '" + token +
                         "' (use identity names, GF_* names, or 'all')");
    }
    return runs;
}

int cmd_check(const std::vector<std::string>& tokens, long n_max, std::optional<long> p_override,
              std::optional<long> m_override, const CliConfig& cfg, std::ostream& out) {
    if (n_max < 1) throw UsageError("check: n_max must be >= 1");
    const auto runs = expand_suite(tokens, p_override, m_override);
    if (runs.empty()) throw UsageError("check: no suite given (identity names or 'all')");
    bool all_ok = true;
    for (const auto& run : runs) {
        const bool ok = run.is_gf ? run_gf_check(run.gf_name, n_max, cfg.order, out)
                                  : run_core_identity(run.id, run.params, n_max, cfg.jobs, out);
        all_ok = all_ok && ok;
    }
    out << (all_ok ? "check: all identities verified\n" : "check: failures detected\n");
    return all_ok ? 0 : 1;
}

// ---- oeis-verify ----

int cmd_oeis_verify(const std::string& path, const SeqSpec& spec, long offset, std::ostream& out,
                    std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("oeis-verify: cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();

    std::vector<BFileEntry> entries;
    try {
        entries = trinom::parse_bfile(buf.str());
    } catch (const BFileError& e) {
        err << "oeis-verify: parse error at " << e.what() << "\n";
        return 2;
    }

    long mismatches = 0;
    for (const auto& entry : entries) {
        const long n = entry.index - offset;
        if (n < 0)
            throw UsageError("oeis-verify: entry index " + std::to_string(entry.index) +
                             " maps to negative sequence index with offset " +
                             std::to_string(offset));
        const ExactRat computed = trinom::seq_value(spec, n);
        if (!(computed == ExactRat(entry.value))) {
            err << "oeis-verify: mismatch at index " << entry.index << ": file has "
                << entry.value.str() << ", " << spec.describe() << " gives " << computed.str()
                << "\n";
            ++mismatches;
        }
    }
    if (mismatches != 0) {
        err << "oeis-verify: " << mismatches << " of " << entries.size() << " entries differ\n";
        return 1;
    }
    out << "oeis-verify: " << entries.size() << " entries match " << spec.describe() << "\n";
    return 0;
}

}  // namespace

int run_seqtool(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact central-trinomial / Motzkin sequence toolkit"};
    app.require_subcommand(0, 1);

    CliConfig cfg;
    app.add_option("--order", cfg.order, "truncation order for series-backed checks")
        ->envname("SEQTOOL_ORDER")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for identity checking")
        ->envname("SEQTOOL_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--oracle-bound", cfg.oracle_bound, "index cap for oracle methods")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "emit sequence terms");
    gen->fallthrough();
    std::string gen_family;
    std::optional<long> gen_p, gen_m, gen_col;
    long gen_from = 0, gen_to = 0;
    std::string gen_format = "plain";
    gen->add_option("family", gen_family, "sequence family name")->required();
    gen->add_option("--p", gen_p, "associated order p");
    gen->add_option("--m-step", gen_m, "step m of the generalized families");
    gen->add_option("--column", gen_col, "trinomial-coefficient column");
    gen->add_option("--from", gen_from, "first index (default 0)");
    gen->add_option("--to", gen_to, "last index")->required();
    gen->add_option("--format", gen_format, "plain, csv, or bfile");

    // table1
    auto* table1 = app.add_subcommand("table1", "reproduce the reference table of c^0, c^1, 6*c^2");
    table1->fallthrough();

    // check
    auto* check = app.add_subcommand("check", "run identity suites");
    check->fallthrough();
    std::vector<std::string> check_tokens;
    std::optional<long> check_p, check_m;
    check->add_option("suite", check_tokens,
                      "identity names, GF_* names, or 'all'; a trailing integer sets n_max "
                      "(default 200)");
    check->add_option("--p", check_p, "restrict parameterized identities to this p");
    check->add_option("--m-step", check_m, "restrict parameterized identities to this m");

    // oeis-verify
    auto* oeis = app.add_subcommand("oeis-verify", "compare a local b-file against a family");
    oeis->fallthrough();
    std::string oeis_path, oeis_family;
    std::optional<long> oeis_p, oeis_m, oeis_col;
    long oeis_offset = 0;
    oeis->add_option("file", oeis_path, "b-file path")->required();
    oeis->add_option("--family", oeis_family, "sequence family name")->required();
    oeis->add_option("--p", oeis_p, "associated order p");
    oeis->add_option("--m-step", oeis_m, "step m of the generalized families");
    oeis->add_option("--column", oeis_col, "trinomial-coefficient column");
    oeis->add_option("--offset", oeis_offset,
                     "file index minus this offset gives the sequence index");

    // bench
    auto* bench = app.add_subcommand("bench", "compare computation methods, then time them");
    bench->fallthrough();
    std::string bench_family;
    std::optional<long> bench_p, bench_m, bench_col;
    long bench_n_max = 0;
    std::vector<std::string> bench_methods;
    bool bench_csv = false;
    bench->add_option("family", bench_family, "sequence family name")->required();
    bench->add_option("--p", bench_p, "associated order p");
    bench->add_option("--m-step", bench_m, "step m of the generalized families");
    bench->add_option("--column", bench_col, "trinomial-coefficient column");
    bench->add_option("--n-max", bench_n_max, "last index to compute")->required();
    bench->add_option("--methods", bench_methods, "subset of direct_sum,recurrence,oracle")
        ->required()
        ->delimiter(',');
    bench->add_flag("--csv", bench_csv, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(build_spec(gen_family, gen_p, gen_m, gen_col), gen_from, gen_to,
                           gen_format, out);
        if (table1->parsed()) return cmd_table1(out, err);
        if (check->parsed()) {
            long n_max = 200;
            std::vector<std::string> tokens = check_tokens;
            if (!tokens.empty() && !tokens.back().empty() &&
                tokens.back().find_first_not_of("0123456789") == std::string::npos) {
                try {
                    n_max = std::stol(tokens.back());
                } catch (const std::out_of_range&) {
                    throw UsageError("check: n_max '" + tokens.back() + "' is out of range");
                }
                tokens.pop_back();
            }
            return cmd_check(tokens, n_max, check_p, check_m, cfg, out);
        }
        if (oeis->parsed())
            return cmd_oeis_verify(oeis_path, build_spec(oeis_family, oeis_p, oeis_m, oeis_col),
                                   oeis_offset, out, err);
        if (bench->parsed()) {
            if (bench_n_max < 0) throw UsageError("bench: n_max must be >= 0");
            const SeqSpec spec = build_spec(bench_family, bench_p, bench_m, bench_col);
            std::vector<BenchMethod> methods;
            methods.reserve(bench_methods.size());
            for (const auto& name : bench_methods)
                methods.push_back(make_method(spec, name, bench_n_max, cfg.oracle_bound));
            return run_bench(spec, bench_n_max, methods, bench_csv, out, err);
        }
        err << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "seqtool: " << e.what() << "\n";
        return 2;
    } catch (const BFileError& e) {
        err << "seqtool: parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "seqtool: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace seqtool
