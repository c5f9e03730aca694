#include "qeat/eat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qeat/error.hpp"
#include "qeat/golden.hpp"

namespace qeat {

namespace {

// ln(2^t + e²), stable for large t.
double ln_two_pow_plus_e2(double t) {
    const double a = t * std::numbers::ln2;
    const double hi = std::max(a, 2.0);
    const double lo = std::min(a, 2.0);
    return hi + std::log1p(std::exp(lo - hi));
}

void check_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw Error(ErrorKind::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " outside (1, 2)");
    }
}

double common_terms(const EatParams& p, const TradeoffStats& stats, double alpha, bool include_k) {
    const double t = alpha - 1.0;
    const double v = second_order_v(stats, p.d_a);
    double bound = p.n * p.h - p.n * t * std::numbers::ln2 / 2.0 * v * v;
    if (include_k) bound -= p.n * t * t * k_alpha(stats, p.d_a, p.classical_a, alpha);
    return bound;
}

}  // namespace

TradeoffFunction::TradeoffFunction(Names alphabet, std::vector<double> values)
    : alphabet_(std::move(alphabet)), values_(std::move(values)) {
    if (alphabet_.size() != values_.size() || values_.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "tradeoff alphabet and values differ in length");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw Error(ErrorKind::DomainError, "tradeoff value is not finite");
    }
}

double TradeoffFunction::value(std::string_view symbol) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i] == symbol) return values_[i];
    }
    throw Error(ErrorKind::DimensionMismatch, "unknown symbol " + std::string(symbol));
}

double TradeoffFunction::evaluate(std::span<const double> q) const {
    if (q.size() != values_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "distribution length does not match alphabet");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * values_[i];
    return s;
}

double TradeoffFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }
double TradeoffFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }

void TradeoffStats::validate() const {
    const double slack = 1e-12 * std::max({1.0, std::abs(max_f), std::abs(min_f)});
    if (!(min_f <= min_sigma_f + slack && min_sigma_f <= max_f + slack)) {
        throw Error(ErrorKind::DomainError, "min_sigma_f must lie between min_f and max_f");
    }
    if (!(var_f >= 0.0) || !std::isfinite(var_f)) {
        throw Error(ErrorKind::DomainError, "var_f must be finite and nonnegative");
    }
}

std::vector<std::string> EatParams::validate() const {
    if (!(n >= 1.0) || !std::isfinite(n)) throw Error(ErrorKind::DomainError, "n must be at least 1");
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::DomainError, "eps must lie in (0, 1)");
    if (!(p_omega > 0.0 && p_omega <= 1.0)) {
        throw Error(ErrorKind::DomainError, "p_omega must lie in (0, 1]");
    }
    if (d_a < 2) throw Error(ErrorKind::DomainError, "d_A must be at least 2");
    if (!std::isfinite(h)) throw Error(ErrorKind::DomainError, "h must be finite");
    std::vector<std::string> warnings;
    if (h > std::log2(static_cast<double>(d_a))) {
        warnings.push_back("h exceeds log d_A; the bound cannot be attained");
    }
    return warnings;
}

TradeoffStats tradeoff_stats(const TradeoffFunction& f, std::optional<double> min_sigma_hint,
                             std::optional<double> var_hint) {
    TradeoffStats s;
    s.max_f = f.max();
    s.min_f = f.min();
    s.min_sigma_f = min_sigma_hint.value_or(s.min_f);
    const double range = s.max_f - s.min_f;
    s.var_f = var_hint.value_or(range * range / 4.0);
    s.validate();
    return s;
}

double k_alpha(const TradeoffStats& stats, std::size_t d_a, bool classical_a, double alpha) {
    check_alpha(alpha);
    const double log_d = std::log2(static_cast<double>(d_a));
    const double exponent = (classical_a ? 1.0 : 2.0) * log_d + (stats.max_f - stats.min_sigma_f);
    const double l = ln_two_pow_plus_e2(exponent);
    const double mu = 2.0 - alpha;
    return std::exp2((alpha - 1.0) * exponent) * l * l * l / (6.0 * mu * mu * mu * std::numbers::ln2);
}

double second_order_v(const TradeoffStats& stats, std::size_t d_a) {
    const double d = static_cast<double>(d_a);
    return std::sqrt(stats.var_f + 2.0) + std::log2(2.0 * d * d + 1.0);
}

double smoothing_cost(const EatParams& p) {
    return 1.0 - 2.0 * std::log2(p.eps * p.p_omega);
}

double eat_bound_alpha(const EatParams& p, const TradeoffStats& stats, double alpha, bool include_k) {
    check_alpha(alpha);
    p.validate();
    return common_terms(p, stats, alpha, include_k) - smoothing_cost(p) / (alpha - 1.0);
}

double eat_bound_renyi(const EatParams& p, const TradeoffStats& stats, double alpha) {
    check_alpha(alpha);
    p.validate();
    return common_terms(p, stats, alpha, true) -
           alpha / (alpha - 1.0) * std::log2(1.0 / p.p_omega);
}

TheoremBound eat_bound_theorem(const EatParams& p, const TradeoffStats& stats) {
    p.validate();
    const double cost = smoothing_cost(p);
    const double v = second_order_v(stats, p.d_a);
    const double exponent =
        2.0 * std::log2(static_cast<double>(p.d_a)) + (stats.max_f - stats.min_sigma_f);
    const double l = ln_two_pow_plus_e2(exponent);

    TheoremBound t;
    t.c = std::sqrt(2.0 * std::numbers::ln2) * v * std::sqrt(cost);
    t.c_prime = 35.0 * cost / (v * v) * std::exp2(exponent) * l * l * l;
    t.bound = p.n * p.h - t.c * std::sqrt(p.n) - t.c_prime;
    t.small_n = p.n < 8.0 * std::numbers::ln2 * cost / (v * v);
    return t;
}

double closed_form_alpha(const EatParams& p, const TradeoffStats& stats) {
    const double v = second_order_v(stats, p.d_a);
    const double alpha =
        1.0 + std::sqrt(2.0 * smoothing_cost(p)) / (std::sqrt(p.n * std::numbers::ln2) * v);
    return std::clamp(alpha, kAlphaSearchLow, kAlphaSearchHigh);
}

AlphaOptimum optimize_alpha(const EatParams& p, const TradeoffStats& stats,
                            const OptimizeOptions& options) {
    p.validate();
    const auto objective = [&](double alpha) {
        return eat_bound_alpha(p, stats, alpha, options.include_k);
    };
    // The interesting α − 1 spans many decades, so the search runs over log(α − 1).
    const auto in_log = [&](double u) { return objective(1.0 + std::exp(u)); };
    const auto search = [&](double lo, double hi) {
        const ScalarMaximum m =
            golden_section_max(in_log, std::log(lo - 1.0), std::log(hi - 1.0), 1e-12, 400);
        return AlphaOptimum{1.0 + std::exp(m.x), m.value};
    };

    AlphaOptimum best = search(kAlphaSearchLow, kAlphaSearchHigh);
    const double seed = closed_form_alpha(p, stats);
    if (const double v = objective(seed); v > best.bound) best = {seed, v};

    const int points = std::max(options.grid_points, 2);
    const double step = (kAlphaSearchHigh - kAlphaSearchLow) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double alpha = kAlphaSearchLow + step * i;
        const double v = objective(alpha);
        if (v > best.bound + 1e-9 * std::abs(best.bound)) {
            AlphaOptimum local{alpha, v};
            const AlphaOptimum refined = search(std::max(kAlphaSearchLow, alpha - step),
                                                std::min(kAlphaSearchHigh, alpha + step));
            if (refined.bound > local.bound) local = refined;
            best = local;
        }
    }
    return best;
}

InfrequentTradeoff infrequent_tradeoff(const TradeoffFunction& g, double gamma,
                                       const std::string& no_test_symbol) {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw Error(ErrorKind::GammaOutOfRange, "gamma must lie in (0, 1]");
    }
    const double max_g = g.max();
    const double min_g = g.min();
    Names alphabet = g.alphabet();
    std::vector<double> values;
    for (double v : g.values()) values.push_back(max_g + (v - max_g) / gamma);
    alphabet.push_back(no_test_symbol);
    values.push_back(max_g);

    TradeoffFunction f(std::move(alphabet), std::move(values));
    const double range = max_g - min_g;
    TradeoffStats stats = tradeoff_stats(f, min_g, range * range / gamma);
    return {std::move(f), stats};
}

}  // namespace qeat
