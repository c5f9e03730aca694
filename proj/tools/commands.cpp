#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "qeat/csv.hpp"
#include "qeat/dire.hpp"
#include "qeat/eat.hpp"
#include "qeat/error.hpp"
#include "qeat/verify.hpp"

namespace qeat::cli {

namespace {

struct UsageError {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError{message};
}

std::string fmt(double v) { return CsvTable::format(v); }

void result(std::ostream& out, const std::string& key, const std::string& value) {
    out << "RESULT " << key << '=' << value << '\n';
}

void result(std::ostream& out, const std::string& key, double value) { result(out, key, fmt(value)); }

void emit_table(const CsvTable& table, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        table.write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    require(static_cast<bool>(file), "--out: cannot open " + path);
    table.write(file);
    file.close();
    require(static_cast<bool>(file), "--out: failed writing " + path);
    result(out, "rows", std::to_string(table.rows().size()));
    result(out, "file", path);
}

void check_probability_flag(double v, const char* flag, bool allow_one) {
    require(v > 0.0 && (allow_one ? v <= 1.0 : v < 1.0),
            std::string(flag) + " must lie in (0, 1" + (allow_one ? "]" : ")"));
}

struct RateCurveFlags {
    double e = 0.8;
    std::vector<double> gammas{1.0};
    double eps = 1e-5;
    double p_omega = 1e-5;
    double n_min = 1e5;
    double n_max = 1e10;
    int points = 20;
    bool optimize_pb = false;
    std::string out;
};

void rate_curve_command(const RateCurveFlags& f, std::ostream& out) {
    require(f.points >= 2, "--points must be at least 2");
    require(f.e > kChshClassical && f.e < kChshQuantum, "--e must lie in (0.75, cos^2(pi/8))");
    for (double g : f.gammas) check_probability_flag(g, "--gamma", true);
    check_probability_flag(f.eps, "--eps", false);
    check_probability_flag(f.p_omega, "--pomega", true);
    require(f.n_min >= 1.0, "--n-min must be at least 1");
    require(f.n_max > f.n_min && std::isfinite(f.n_max), "--n-max must exceed --n-min");

    CsvTable table({"n", "gamma", "rate", "alpha_star", "p_b"});
    for (double gamma : f.gammas) {
        RateCurveConfig cfg;
        cfg.base.gamma = gamma;
        cfg.base.e = f.e;
        cfg.base.eps = f.eps;
        cfg.base.p_omega = f.p_omega;
        cfg.n_min = f.n_min;
        cfg.n_max = f.n_max;
        cfg.points = f.points;
        cfg.optimize_p_b = f.optimize_pb;
        for (const RatePoint& p : rate_curve(cfg)) {
            table.add_row(std::vector<double>{p.n, p.gamma, p.rate, p.alpha_star, p.p_b_used});
        }
    }
    emit_table(table, f.out, out);
}

struct BoundFlags {
    double n = 0.0;
    double h = 0.0;
    std::optional<double> var_f;
    double max_f = 1.0;
    double min_sigma_f = 0.0;
    std::optional<double> min_f;
    std::size_t d_a = 2;
    bool classical_a = false;
    double eps = 1e-5;
    double p_omega = 1.0;
    std::optional<double> alpha;
};

void bound_command(const BoundFlags& f, std::ostream& out, std::ostream& err) {
    require(f.n >= 1.0 && std::isfinite(f.n), "--n must be at least 1");
    require(std::isfinite(f.h), "--h must be finite");
    require(f.d_a >= 2, "--d-a must be at least 2");
    check_probability_flag(f.eps, "--eps", false);
    check_probability_flag(f.p_omega, "--pomega", true);
    require(f.max_f >= f.min_sigma_f, "--max-f must be at least --min-sigma-f");
    if (f.var_f) require(*f.var_f >= 0.0, "--var-f must be nonnegative");
    if (f.alpha) require(*f.alpha > 1.0 && *f.alpha < 2.0, "--alpha must lie in (1, 2)");

    TradeoffStats stats;
    stats.max_f = f.max_f;
    stats.min_sigma_f = f.min_sigma_f;
    stats.min_f = f.min_f.value_or(f.min_sigma_f);
    require(stats.min_f <= stats.min_sigma_f, "--min-f must not exceed --min-sigma-f");
    const double range = stats.max_f - stats.min_f;
    stats.var_f = f.var_f.value_or(range * range / 4.0);

    EatParams p;
    p.n = f.n;
    p.h = f.h;
    p.d_a = f.d_a;
    p.classical_a = f.classical_a;
    p.eps = f.eps;
    p.p_omega = f.p_omega;
    for (const auto& w : p.validate()) err << "warning: " << w << '\n';

    const double d = static_cast<double>(f.d_a);
    const TheoremBound theorem = eat_bound_theorem(p, stats);
    result(out, "log_dimension_term", std::log2(2.0 * d * d + 1.0));
    result(out, "log_dimension_term_argument", std::to_string(2 * f.d_a * f.d_a + 1));
    result(out, "v", second_order_v(stats, f.d_a));
    result(out, "var_f", stats.var_f);
    result(out, "c", theorem.c);
    result(out, "c_prime", theorem.c_prime);
    result(out, "theorem_bound", theorem.bound);
    result(out, "small_n", theorem.small_n ? "true" : "false");

    if (f.alpha) {
        result(out, "alpha", *f.alpha);
        result(out, "alpha_bound", eat_bound_alpha(p, stats, *f.alpha));
        return;
    }
    const AlphaOptimum best = optimize_alpha(p, stats);
    result(out, "alpha_star", best.alpha);
    result(out, "optimized_bound", best.bound);
    result(out, "optimized_rate", best.bound / p.n);
}

void variance_curve_command(int steps, const std::string& path, std::ostream& out) {
    require(steps >= 2, "--steps must be at least 2");
    CsvTable table({"q", "v"});
    for (const auto& [q, v] : bernoulli_variance_curve(steps)) table.add_row(std::vector<double>{q, v});
    emit_table(table, path, out);
}

int verify_command(std::uint64_t seed, int trials, const std::vector<std::string>& names,
                   std::ostream& out) {
    require(trials >= 1, "--trials must be positive");
    for (const auto& n : names) require(is_suite(n), "--suite: unknown suite " + n);
    int failed_suites = 0;
    const auto results = run_suites(names, seed, trials);
    for (const auto& r : results) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << " passed=" << r.passed
            << " failed=" << r.failed << " seconds=" << fmt(r.seconds) << '\n';
        for (const auto& f : r.failures) out << "  " << f << '\n';
        if (!r.ok()) ++failed_suites;
    }
    result(out, "suites", std::to_string(results.size()));
    result(out, "failed_suites", std::to_string(failed_suites));
    return failed_suites == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-size entropy accumulation bounds and divergence checks", "qeat"};
    app.require_subcommand(1);

    RateCurveFlags rc;
    auto* rate = app.add_subcommand("rate-curve", "certified CHSH randomness rates as CSV");
    rate->add_option("--e", rc.e, "minimum tolerated winning frequency")->capture_default_str();
    rate->add_option("--gamma", rc.gammas, "testing probability (repeatable)")->capture_default_str();
    rate->add_option("--eps", rc.eps, "smoothing parameter")->capture_default_str();
    rate->add_option("--pomega", rc.p_omega, "lower bound on the non-abort probability")
        ->capture_default_str();
    rate->add_option("--n-min", rc.n_min, "smallest number of rounds")->capture_default_str();
    rate->add_option("--n-max", rc.n_max, "largest number of rounds")->capture_default_str();
    rate->add_option("--points", rc.points, "log-spaced points per curve")->capture_default_str();
    rate->add_flag("--optimize-pb", rc.optimize_pb, "tune the tangent point per n");
    rate->add_option("--out", rc.out, "CSV path (stdout if omitted)");

    BoundFlags bf;
    auto* bound = app.add_subcommand("bound", "closed-form and alpha-optimized entropy bounds");
    // --h is the tradeoff threshold here, so help is long-form only.
    bound->set_help_flag("--help", "Print this help message and exit");
    bound->add_option("--n", bf.n, "number of rounds")->required();
    bound->add_option("--h", bf.h, "tradeoff threshold in bits")->required();
    bound->add_option("--var-f", bf.var_f, "upper bound on Var f");
    bound->add_option("--max-f", bf.max_f, "Max f")->capture_default_str();
    bound->add_option("--min-sigma-f", bf.min_sigma_f, "lower bound on Min_Sigma f")
        ->capture_default_str();
    bound->add_option("--min-f", bf.min_f, "Min f (defaults to --min-sigma-f)");
    bound->add_option("--d-a", bf.d_a, "dimension of each A_i")->capture_default_str();
    bound->add_flag("--classical-a", bf.classical_a, "A_i are classical");
    bound->add_option("--eps", bf.eps, "smoothing parameter")->capture_default_str();
    bound->add_option("--pomega", bf.p_omega, "lower bound on the non-abort probability")
        ->capture_default_str();
    bound->add_option("--alpha", bf.alpha, "evaluate at this alpha instead of optimizing");

    int steps = 1000;
    std::string variance_out;
    auto* variance = app.add_subcommand("variance-curve", "v(q) of a biased bit as CSV");
    variance->add_option("--steps", steps, "grid steps over (0, 1)")->capture_default_str();
    variance->add_option("--out", variance_out, "CSV path (stdout if omitted)");

    std::uint64_t seed = 42;
    int trials = 100;
    std::vector<std::string> suite_names;
    auto* verify = app.add_subcommand("verify", "run the seeded property suites");
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--trials", trials, "trials per suite")->capture_default_str();
    verify->add_option("--suite", suite_names, "restrict to this suite (repeatable)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rate->parsed()) rate_curve_command(rc, out);
        if (bound->parsed()) bound_command(bf, out, err);
        if (variance->parsed()) variance_curve_command(steps, variance_out, out);
        if (verify->parsed()) return verify_command(seed, trials, suite_names, out);
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace qeat::cli
