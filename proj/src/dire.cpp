#include "qeat/dire.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qeat/error.hpp"
#include "qeat/golden.hpp"
#include "qeat/variance.hpp"

namespace qeat {

namespace {

constexpr double kTangentLow = kChshClassical + 1e-4;
constexpr int kTangentGrid = 32;

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

bool strictly_inside(double omega) { return omega > kChshClassical && omega < kChshQuantum; }

}  // namespace

double g_star(double omega) {
    if (std::isnan(omega)) throw Error(ErrorKind::DomainError, "omega is NaN");
    if (omega <= kChshClassical) return 0.0;
    if (omega >= kChshQuantum) return 1.0;
    const double s = std::sqrt(std::max(0.0, 16.0 * omega * (omega - 1.0) + 3.0));
    return 1.0 - binary_entropy(0.5 + 0.5 * std::min(s, 1.0));
}

double g_star_derivative(double omega) {
    if (!strictly_inside(omega)) {
        throw Error(ErrorKind::DomainError, "derivative needs omega strictly inside (3/4, cos^2(pi/8))");
    }
    const double s = std::sqrt(16.0 * omega * (omega - 1.0) + 3.0);
    // d/dω of 1 − h((1+s)/2) is atanh(s)/s · (16ω − 8)/ln 2; atanh(s)/s → 1 as s → 0.
    const double ratio = s < 1e-8 ? 1.0 + s * s / 3.0 : std::atanh(s) / s;
    return ratio * (16.0 * omega - 8.0) / std::numbers::ln2;
}

TradeoffFunction tangent_tradeoff(double p_b) {
    if (!strictly_inside(p_b)) {
        throw Error(ErrorKind::DomainError, "tangent point must lie strictly inside (3/4, cos^2(pi/8))");
    }
    const double g = g_star(p_b);
    const double slope = g_star_derivative(p_b);
    return TradeoffFunction({"0", "1"}, {g - p_b * slope, g + (1.0 - p_b) * slope});
}

void DireConfig::validate() const {
    if (!(n >= 1.0) || !std::isfinite(n)) throw Error(ErrorKind::DomainError, "n must be at least 1");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorKind::GammaOutOfRange, "gamma must lie in (0, 1]");
    if (!strictly_inside(e)) throw Error(ErrorKind::DomainError, "e must lie in (3/4, cos^2(pi/8))");
    if (p_b && !strictly_inside(*p_b)) {
        throw Error(ErrorKind::DomainError, "p_b must lie in (3/4, cos^2(pi/8))");
    }
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::DomainError, "eps must lie in (0, 1)");
    if (!(p_omega > 0.0 && p_omega <= 1.0)) throw Error(ErrorKind::DomainError, "p_omega must lie in (0, 1]");
}

RatePoint dire_rate(const DireConfig& cfg) {
    cfg.validate();
    const double p_b = cfg.p_b.value_or(cfg.e);
    const TradeoffFunction g = tangent_tradeoff(p_b);
    const InfrequentTradeoff tradeoff = infrequent_tradeoff(g, cfg.gamma);

    EatParams params;
    params.n = cfg.n;
    params.eps = cfg.eps;
    params.p_omega = cfg.p_omega;
    params.d_a = 4;
    params.classical_a = true;
    const std::vector<double> at_threshold{1.0 - cfg.e, cfg.e};
    params.h = g.evaluate(at_threshold);

    const AlphaOptimum best = optimize_alpha(params, tradeoff.stats);
    return {cfg.n, cfg.gamma, best.bound / cfg.n, best.alpha, p_b};
}

RatePoint optimize_tangent_point(const DireConfig& cfg) {
    cfg.validate();
    const auto rate_at = [&cfg](double p_b) {
        DireConfig c = cfg;
        c.p_b = p_b;
        return dire_rate(c);
    };
    RatePoint best = rate_at(cfg.e);
    if (cfg.e <= kTangentLow) return best;
    const double step = (cfg.e - kTangentLow) / (kTangentGrid - 1);
    int best_index = kTangentGrid - 1;
    for (int i = 0; i + 1 < kTangentGrid; ++i) {
        const RatePoint r = rate_at(kTangentLow + step * i);
        if (r.rate > best.rate) {
            best = r;
            best_index = i;
        }
    }
    const double lo = kTangentLow + step * std::max(best_index - 1, 0);
    const double hi = std::min(cfg.e, kTangentLow + step * (best_index + 1));
    const ScalarMaximum refined =
        golden_section_max([&](double p_b) { return rate_at(p_b).rate; }, lo, hi, 1e-7);
    if (refined.value > best.rate) best = rate_at(refined.x);
    return best;
}

std::vector<double> log_spaced_rounds(double n_min, double n_max, int points) {
    if (points < 2) throw Error(ErrorKind::DomainError, "at least two points are needed");
    if (!(n_min >= 1.0 && n_max > n_min) || !std::isfinite(n_max)) {
        throw Error(ErrorKind::DomainError, "need 1 <= n_min < n_max");
    }
    std::vector<double> ns;
    const double lo = std::log(n_min), hi = std::log(n_max);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        ns.push_back(std::round(std::exp(lo + t * (hi - lo))));
    }
    ns.front() = std::round(n_min);
    ns.back() = std::round(n_max);
    return ns;
}

std::vector<RatePoint> rate_curve(const RateCurveConfig& cfg) {
    std::vector<RatePoint> out;
    for (double n : log_spaced_rounds(cfg.n_min, cfg.n_max, cfg.points)) {
        DireConfig c = cfg.base;
        c.n = n;
        out.push_back(cfg.optimize_p_b ? optimize_tangent_point(c) : dire_rate(c));
    }
    return out;
}

std::vector<std::pair<double, double>> bernoulli_variance_curve(int steps) {
    if (steps < 2) throw Error(ErrorKind::DomainError, "steps must be at least 2");
    std::vector<std::pair<double, double>> rows;
    for (int i = 1; i < steps; ++i) {
        const double q = static_cast<double>(i) / steps;
        rows.emplace_back(q, bernoulli_entropy_variance(q));
    }
    return rows;
}

}  // namespace qeat
