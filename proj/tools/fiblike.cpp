#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fiblike/grid.hpp"
#include "fiblike/suites.hpp"
#include "fiblike/summation.hpp"

using namespace fiblike;
using Json = nlohmann::ordered_json;

namespace {

constexpr Index kMaxIndex = 1'000'000;
constexpr Index kMaxLength = 10'000'000;
constexpr int kReportVersion = 1;

enum class Format { Json, Csv, Text };

struct UsageError : Error {
    using Error::Error;
};

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    if (s == "text")
        return Format::Text;
    throw UsageError("unknown format '" + s + "'");
}

void check_index(Index j, std::string_view what, Index bound = kMaxIndex)
{
    if (j < -bound || j > bound)
        throw UsageError(std::string(what) + " out of range [-" + std::to_string(bound) + ", " +
                         std::to_string(bound) + "]");
}

void check_length(Index n)
{
    if (n < 0 || n > kMaxLength)
        throw UsageError("--n must be in [0, " + std::to_string(kMaxLength) + "]");
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- eval ----------------------------------------------------------------------

struct EvalArgs {
    std::string g0 = "0", g1 = "1", format = "text";
    std::optional<Index> at, from, to;
};

int run_eval(const EvalArgs& a)
{
    const SequenceSpec spec(parse_integer(a.g0), parse_integer(a.g1));
    const Format fmt = parse_format(a.format);
    Index lo = 0, hi = 0;
    if (a.at) {
        if (a.from || a.to)
            throw UsageError("--at cannot be combined with --from/--to");
        lo = hi = *a.at;
    } else if (a.from && a.to) {
        lo = *a.from;
        hi = *a.to;
    } else {
        throw UsageError("give --at or both --from and --to");
    }
    check_index(lo, "index");
    check_index(hi, "index");
    const auto values = g_range(spec, lo, hi);

    if (fmt == Format::Json) {
        Json out{{"version", kReportVersion}, {"g0", to_string(spec.g0())}, {"g1", to_string(spec.g1())}};
        Json rows = Json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            rows.push_back({{"j", lo + Index(i)}, {"value", to_string(values[i])}});
        out["values"] = std::move(rows);
        std::cout << out.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << "j,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << lo + Index(i) << ',' << to_string(values[i]) << '\n';
    } else if (a.at) {
        std::cout << to_string(values.front()) << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << lo + Index(i) << ' ' << to_string(values[i]) << '\n';
    }
    return 0;
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string family = "all", format = "json", output;
    Index range = 4, n_max = 100;
    std::size_t order = 32, max_records = 1000;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
};

Json records_json(const IdentityReport& r, const std::vector<CaseRecord>& records, std::size_t cap)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < records.size() && i < cap; ++i) {
        Json params = Json::object();
        for (std::size_t p = 0; p < records[i].params.size(); ++p)
            params[p < r.param_names.size() ? r.param_names[p] : "p" + std::to_string(p)] =
                to_string(records[i].params[p]);
        out.push_back({{"params", std::move(params)}, {"residual", to_string(records[i].residual)}});
    }
    return out;
}

bool suite_ok(const IdentityReport& r) { return r.passed() && r.degenerate_failures() == 0; }

int run_verify(const VerifyArgs& a)
{
    const Format fmt = parse_format(a.format);
    SuiteConfig config;
    config.range = a.range;
    config.n_max = a.n_max;
    config.order = a.order;
    if (a.range < 0 || a.range > 64)
        throw UsageError("--range must be in [0, 64]");
    if (a.n_max < 0 || a.n_max > 100000)
        throw UsageError("--n-max must be in [0, 100000]");
    config.sweep.workers = a.workers ? *a.workers : workers_from_env(1);
    if (config.sweep.workers == 0)
        throw UsageError("--workers must be positive");
    config.sweep.sample = a.sample;
    config.sweep.seed = a.seed;
    const Family family = family_from_name(a.family);

    const auto start = std::chrono::steady_clock::now();
    const auto results = run_family(family, config);
    const double total = seconds_since(start);

    bool ok = true;
    for (const auto& r : results)
        ok = ok && suite_ok(r.report);

    std::ostringstream os;
    if (fmt == Format::Json) {
        Json cfg{{"family", family_name(family)}, {"range", a.range},    {"n_max", a.n_max},
                 {"order", a.order},              {"seed", a.seed},      {"sample", nullptr},
                 {"max_records", a.max_records}};
        if (a.sample)
            cfg["sample"] = *a.sample;
        Json suites = Json::array();
        Json timing_suites = Json::array();
        for (const auto& res : results) {
            const auto& r = res.report;
            suites.push_back({{"identity", r.identity},
                              {"params", r.param_names},
                              {"checked", r.checked},
                              {"passed", suite_ok(r)},
                              {"failure_count", r.failures.size()},
                              {"failures", records_json(r, r.failures, a.max_records)},
                              {"degenerate_count", r.degenerate.size()},
                              {"degenerate_failures", r.degenerate_failures()},
                              {"degenerate", records_json(r, r.degenerate, a.max_records)}});
            timing_suites.push_back({{"identity", r.identity}, {"seconds", res.seconds}});
        }
        Json report{{"version", kReportVersion},
                    {"tool", "fiblike"},
                    {"config", std::move(cfg)},
                    {"passed", ok},
                    {"suites", std::move(suites)},
                    {"timing",
                     {{"workers", config.sweep.workers}, {"total_seconds", total}, {"suites", std::move(timing_suites)}}}};
        os << report.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        os << "identity,checked,failures,degenerate,degenerate_failures,passed\n";
        for (const auto& res : results) {
            const auto& r = res.report;
            os << r.identity << ',' << r.checked << ',' << r.failures.size() << ',' << r.degenerate.size() << ','
               << r.degenerate_failures() << ',' << (suite_ok(r) ? "true" : "false") << '\n';
        }
    } else {
        for (const auto& res : results) {
            const auto& r = res.report;
            os << (suite_ok(r) ? "PASS " : "FAIL ") << r.identity << " checked=" << r.checked
               << " failures=" << r.failures.size() << " degenerate=" << r.degenerate.size() << '\n';
            for (std::size_t i = 0; i < r.failures.size() && i < a.max_records; ++i) {
                os << "  ";
                for (std::size_t p = 0; p < r.failures[i].params.size(); ++p)
                    os << (p < r.param_names.size() ? r.param_names[p] : "p") << '='
                       << to_string(r.failures[i].params[p]) << ' ';
                os << "residual=" << to_string(r.failures[i].residual) << '\n';
            }
        }
        os << (ok ? "all suites passed" : "failures found") << '\n';
    }

    if (a.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream file(a.output);
        if (!file)
            throw UsageError("cannot write " + a.output);
        file << os.str();
    }
    return ok ? 0 : 1;
}

// --- sum -----------------------------------------------------------------------

struct SumArgs {
    std::string kind = "sq", g0 = "0", g1 = "1", x = "1", format = "text";
    Index k = 0, s = 0, n = 0;
};

int run_sum(const SumArgs& a)
{
    const SequenceSpec spec(parse_integer(a.g0), parse_integer(a.g1));
    const BigRat x = parse_rational(a.x);
    const Format fmt = parse_format(a.format);
    check_length(a.n);
    check_index(a.k, "--k");
    check_index(a.s, "--s");

    BigRat closed, brute;
    if (a.kind == "sq") {
        closed = sum_sq_closed({spec, a.k, x, a.n});
        brute = sum_sq_brute({spec, a.k, x, a.n});
    } else if (a.kind == "sq-initfree") {
        closed = sum_sq_initfree({spec, a.k, x, a.n});
        brute = sum_sq_brute({spec, a.k, x, a.n});
    } else if (a.kind == "f-sq") {
        closed = sum_F_sq_closed(x, a.n);
        brute = sum_sq_brute({SequenceSpec::fibonacci(), 0, x, a.n});
    } else if (a.kind == "product") {
        closed = sum_product_closed(spec, a.k, a.s, x, a.n);
        brute = sum_product_brute(spec, a.k, a.s, x, a.n);
    } else if (a.kind == "spread") {
        closed = spread_product_closed(spec, a.k, x, a.n);
        brute = sum_product_brute(spec, a.k, -a.k, x, a.n);
    } else if (a.kind == "corollary-shifted") {
        closed = corollary_product_sums(spec, x, a.n).shifted;
        brute = corollary_product_brute(spec, x, a.n).shifted;
    } else if (a.kind == "corollary-adjacent") {
        closed = corollary_product_sums(spec, x, a.n).adjacent;
        brute = corollary_product_brute(spec, x, a.n).adjacent;
    } else {
        throw UsageError("unknown --kind '" + a.kind + "'");
    }
    const bool match = closed == brute;
    if (fmt == Format::Json)
        std::cout << Json{{"version", kReportVersion}, {"kind", a.kind},           {"closed", to_string(closed)},
                          {"brute", to_string(brute)},  {"match", match}}.dump(2)
                  << '\n';
    else if (fmt == Format::Csv)
        std::cout << "closed,brute,match\n" << to_string(closed) << ',' << to_string(brute) << ',' << match << '\n';
    else
        std::cout << to_string(closed) << ' ' << to_string(brute) << (match ? " match" : " mismatch") << '\n';
    return match ? 0 : 1;
}

// --- gf ------------------------------------------------------------------------

struct GfArgs {
    std::string which = "fib-squares", g0 = "0", g1 = "1", format = "text";
    std::size_t order = 10;
    Index k = 0;
};

int run_gf(const GfArgs& a)
{
    const Format fmt = parse_format(a.format);
    if (a.order > 100000)
        throw UsageError("--order must be at most 100000");
    check_index(a.k, "--k");
    SeriesPrefix series;
    IdentityReport check;
    if (a.which == "fib-squares") {
        series = series_expand(Poly{0, 1, -1}, Poly{1, -2, -2, 1}, a.order);
        check = gf_fib_square_check(a.order);
    } else if (a.which == "spread") {
        const SequenceSpec spec(parse_integer(a.g0), parse_integer(a.g1));
        series = spread_product_series(spec, a.k, a.order);
        check = gf_spread_product_check(spec, a.k, a.order);
    } else {
        throw UsageError("unknown --which '" + a.which + "'");
    }
    if (fmt == Format::Json) {
        Json coeffs = Json::array();
        for (const auto& c : series.coeffs)
            coeffs.push_back(to_string(c));
        std::cout << Json{{"version", kReportVersion}, {"which", a.which}, {"coefficients", std::move(coeffs)},
                          {"matches_sequence", check.passed()}}.dump(2)
                  << '\n';
    } else {
        const char sep = fmt == Format::Csv ? ',' : ' ';
        for (std::size_t i = 0; i < series.coeffs.size(); ++i)
            std::cout << (i ? std::string(1, sep) : "") << to_string(series.coeffs[i]);
        std::cout << '\n';
    }
    if (!check.passed())
        std::cerr << "series disagrees with the sequence at " << check.failures.size() << " coefficient(s)\n";
    return check.passed() ? 0 : 1;
}

// --- bench ---------------------------------------------------------------------

struct BenchArgs {
    std::string g0 = "2", g1 = "1", x = "1", format = "csv";
    Index n_max = 1'000'000, k = 0;
};

int run_bench(const BenchArgs& a)
{
    const SequenceSpec spec(parse_integer(a.g0), parse_integer(a.g1));
    const BigRat x = parse_rational(a.x);
    const Format fmt = parse_format(a.format);
    if (a.n_max < 1 || a.n_max > kMaxLength)
        throw UsageError("--n-max must be in [1, " + std::to_string(kMaxLength) + "]");
    check_index(a.k, "--k");

    std::vector<Index> ladder;
    for (Index n = 1000; n < a.n_max; n *= 10)
        ladder.push_back(n);
    ladder.push_back(a.n_max);

    struct Row {
        Index n;
        double closed, brute;
        bool match;
    };
    std::vector<Row> rows;
    bool ok = true;
    for (Index n : ladder) {
        const WeightedSumQuery q{spec, a.k, x, n};
        auto start = std::chrono::steady_clock::now();
        const BigRat closed = sum_sq_closed(q);
        const double t_closed = seconds_since(start);
        start = std::chrono::steady_clock::now();
        const BigRat brute = sum_sq_brute(q);
        const double t_brute = seconds_since(start);
        rows.push_back({n, t_closed, t_brute, closed == brute});
        ok = ok && closed == brute;
    }

    auto ratio = [](const Row& r) { return r.closed > 0 ? r.brute / r.closed : 0.0; };
    if (fmt == Format::Json) {
        Json out = Json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n}, {"t_closed", r.closed}, {"t_brute", r.brute}, {"ratio", ratio(r)},
                           {"match", r.match}});
        std::cout << Json{{"version", kReportVersion}, {"rows", std::move(out)}}.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        std::cout << "n,t_closed,t_brute,ratio\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.closed << ',' << r.brute << ',' << ratio(r) << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << "n=" << r.n << " closed=" << r.closed << "s brute=" << r.brute << "s ratio=" << ratio(r)
                      << (r.match ? "" : " MISMATCH") << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact evaluation and verification of Fibonacci-like square identities"};
    app.require_subcommand(1);
    std::function<int()> action;

    EvalArgs eval;
    auto* e = app.add_subcommand("eval", "Evaluate G_j for one index or a range");
    e->add_option("--g0", eval.g0, "G_0")->capture_default_str();
    e->add_option("--g1", eval.g1, "G_1")->capture_default_str();
    e->add_option("--at", eval.at, "Single index");
    e->add_option("--from", eval.from, "First index of a range");
    e->add_option("--to", eval.to, "Last index of a range");
    e->add_option("--format", eval.format, "text|csv|json")->capture_default_str();
    e->callback([&] { action = [&] { return run_eval(eval); }; });

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run identity suites and report residuals");
    v->add_option("--family", verify.family, "main|catalog|sums|gf|binomial|all")->capture_default_str();
    v->add_option("--range", verify.range, "Index radius of the grids")->capture_default_str();
    v->add_option("--n-max", verify.n_max, "Largest sum length")->capture_default_str();
    v->add_option("--order", verify.order, "Series order for generating functions")->capture_default_str();
    v->add_option("--workers", verify.workers, "Worker threads (default: FIBLIKE_WORKERS or 1)");
    v->add_option("--seed", verify.seed, "Seed for sampled grids")->capture_default_str();
    v->add_option("--sample", verify.sample, "Evaluate only this many random points per suite");
    v->add_option("--max-records", verify.max_records, "Cap on listed records per suite")->capture_default_str();
    v->add_option("--format", verify.format, "json|csv|text")->capture_default_str();
    v->add_option("--output", verify.output, "Write the report to a file");
    v->callback([&] { action = [&] { return run_verify(verify); }; });

    SumArgs sum;
    auto* s = app.add_subcommand("sum", "Compare a closed-form sum with direct summation");
    s->add_option("--kind", sum.kind, "sq|sq-initfree|f-sq|product|spread|corollary-shifted|corollary-adjacent")
        ->capture_default_str();
    s->add_option("--g0", sum.g0)->capture_default_str();
    s->add_option("--g1", sum.g1)->capture_default_str();
    s->add_option("--k", sum.k)->capture_default_str();
    s->add_option("--s", sum.s, "Second shift for --kind product")->capture_default_str();
    s->add_option("--x", sum.x, "Weight as p/q")->capture_default_str();
    s->add_option("--n", sum.n)->capture_default_str();
    s->add_option("--format", sum.format, "text|csv|json")->capture_default_str();
    s->callback([&] { action = [&] { return run_sum(sum); }; });

    GfArgs gf;
    auto* g = app.add_subcommand("gf", "Expand a generating function");
    g->add_option("--which", gf.which, "fib-squares|spread")->capture_default_str();
    g->add_option("--order", gf.order)->capture_default_str();
    g->add_option("--g0", gf.g0)->capture_default_str();
    g->add_option("--g1", gf.g1)->capture_default_str();
    g->add_option("--k", gf.k)->capture_default_str();
    g->add_option("--format", gf.format, "text|csv|json")->capture_default_str();
    g->callback([&] { action = [&] { return run_gf(gf); }; });

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time closed-form against direct sums of squares");
    b->add_option("--n-max", bench.n_max)->capture_default_str();
    b->add_option("--g0", bench.g0)->capture_default_str();
    b->add_option("--g1", bench.g1)->capture_default_str();
    b->add_option("--k", bench.k)->capture_default_str();
    b->add_option("--x", bench.x)->capture_default_str();
    b->add_option("--format", bench.format, "csv|text|json")->capture_default_str();
    b->callback([&] { action = [&] { return run_bench(bench); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
}
