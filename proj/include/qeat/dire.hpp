#pragma once

// Randomness rates certified by the CHSH winning probability.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "qeat/eat.hpp"

namespace qeat {

/// Classical and quantum optima of the CHSH winning probability.
inline constexpr double kChshClassical = 0.75;
inline const double kChshQuantum = (2.0 + std::sqrt(2.0)) / 4.0;

/// 1 − h(1/2 + 1/2 √(16ω(ω−1) + 3)), clamped to 0 below 3/4 and to 1 above cos²(π/8).
double g_star(double omega);

/// dg*/dω for ω strictly inside (3/4, cos²(π/8)).
double g_star_derivative(double omega);

/// Tangent of g* at p_b as an affine function of the win indicator, alphabet {"0", "1"}.
TradeoffFunction tangent_tradeoff(double p_b);

struct DireConfig {
    double n = 1e6;
    double gamma = 1.0;
    double e = 0.8;  // minimum tolerated winning frequency among test rounds
    double eps = 1e-5;
    double p_omega = 1e-5;
    std::optional<double> p_b;  // tangent point; defaults to e

    void validate() const;
};

struct RatePoint {
    double n = 0.0;
    double gamma = 0.0;
    double rate = 0.0;  // bits per round
    double alpha_star = 0.0;
    double p_b_used = 0.0;
};

RatePoint dire_rate(const DireConfig& cfg);

struct RateCurveConfig {
    DireConfig base;
    double n_min = 1e5;
    double n_max = 1e10;
    int points = 20;
    bool optimize_p_b = false;
};

/// Log-spaced n grid rounded to integers, endpoints included.
std::vector<double> log_spaced_rounds(double n_min, double n_max, int points);

/// One point per n; with optimize_p_b the tangent point is tuned per n.
std::vector<RatePoint> rate_curve(const RateCurveConfig& cfg);

/// Best rate over tangent points in (3/4 + 1e-4, e], e included.
RatePoint optimize_tangent_point(const DireConfig& cfg);

/// (q, v(q)) for q = i/steps, i = 1 … steps−1.
std::vector<std::pair<double, double>> bernoulli_variance_curve(int steps);

}  // namespace qeat
