#pragma once

// Finite-size entropy accumulation bounds (bits) and the statistics of affine
// min-tradeoff functions they consume.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qeat/states.hpp"

namespace qeat {

/// Affine function on distributions, stored by its values on point masses.
class TradeoffFunction {
public:
    TradeoffFunction(Names alphabet, std::vector<double> values);

    const Names& alphabet() const noexcept { return alphabet_; }
    std::span<const double> values() const noexcept { return values_; }
    double value(std::string_view symbol) const;
    /// Σ_x q(x) f(δ_x); q must match the alphabet length.
    double evaluate(std::span<const double> q) const;
    double max() const;
    double min() const;

private:
    Names alphabet_;
    std::vector<double> values_;
};

struct TradeoffStats {
    double max_f = 0.0;
    double min_f = 0.0;
    double min_sigma_f = 0.0;  // lower bound on the minimum over achievable statistics
    double var_f = 0.0;        // upper bound on the variance

    /// Throws DomainError unless min_f ≤ min_sigma_f ≤ max_f and var_f ≥ 0.
    void validate() const;
};

struct EatParams {
    double n = 1.0;  // rounds; may exceed 2^53 only approximately
    double eps = 1e-5;
    double p_omega = 1.0;
    std::size_t d_a = 2;
    bool classical_a = false;
    double h = 0.0;

    /// Throws DomainError on out-of-range fields; returns advisory warnings.
    std::vector<std::string> validate() const;
};

/// Unset hints fall back to min_f and the unconstrained variance maximum (max−min)²/4.
/// A variance hint is used as given, even when it exceeds that maximum.
TradeoffStats tradeoff_stats(const TradeoffFunction& f, std::optional<double> min_sigma_hint = {},
                             std::optional<double> var_hint = {});

/// K_α for α ∈ (1, 2).
double k_alpha(const TradeoffStats& stats, std::size_t d_a, bool classical_a, double alpha);

/// V = √(Var f + 2) + log(2 d_A² + 1).
double second_order_v(const TradeoffStats& stats, std::size_t d_a);

/// log(2 / (ε² pΩ²)), the smoothing and conditioning cost.
double smoothing_cost(const EatParams& p);

/// n h − n(α−1) ln2/2 · V² − log(2/(ε² pΩ²))/(α−1) − n(α−1)² K_α.
/// With include_k false the last term is dropped.
double eat_bound_alpha(const EatParams& p, const TradeoffStats& stats, double alpha,
                       bool include_k = true);

/// Rényi-entropy bound: as above with the penalty α/(α−1) · log(1/pΩ) and no smoothing.
double eat_bound_renyi(const EatParams& p, const TradeoffStats& stats, double alpha);

struct TheoremBound {
    double bound = 0.0;  // n h − c √n − c′
    double c = 0.0;
    double c_prime = 0.0;
    /// n is below the threshold where the closed form is guaranteed to follow from the
    /// per-α bound; the value is still reported.
    bool small_n = false;
};

TheoremBound eat_bound_theorem(const EatParams& p, const TradeoffStats& stats);

/// 1 + √(2 log(2/(ε² pΩ²))) / (√(n ln 2) V), clamped into the optimizer's search interval.
double closed_form_alpha(const EatParams& p, const TradeoffStats& stats);

inline constexpr double kAlphaSearchLow = 1.0 + 1e-9;
inline constexpr double kAlphaSearchHigh = 2.0 - 1e-6;

struct AlphaOptimum {
    double alpha = 0.0;
    double bound = 0.0;
};

struct OptimizeOptions {
    bool include_k = true;
    int grid_points = 64;
};

/// Maximizes eat_bound_alpha over α ∈ (1+1e-9, 2−1e-6).
AlphaOptimum optimize_alpha(const EatParams& p, const TradeoffStats& stats,
                            const OptimizeOptions& options = {});

struct InfrequentTradeoff {
    TradeoffFunction f;
    TradeoffStats stats;
};

/// Extends g on test rounds to f on test rounds plus the no-test symbol, for testing
/// probability γ ∈ (0, 1].
InfrequentTradeoff infrequent_tradeoff(const TradeoffFunction& g, double gamma,
                                       const std::string& no_test_symbol = "none");

}  // namespace qeat
