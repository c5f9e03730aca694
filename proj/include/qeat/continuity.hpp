#pragma once

// Second-order expansion of Rényi divergences around α = 1 with an explicit remainder.

#include "qeat/linalg.hpp"
#include "qeat/states.hpp"

namespace qeat {

/// K_{ρ,σ}(α, μ) = 2^{(α−1)(D'_α − D)} ln³(2^{(α+μ−1)(D'_{α+μ} − D)} + e²) / (6μ³ ln 2)
/// for α > 1 and μ ∈ (0, 1).
double k_remainder(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha, double mu);

/// K(α) for ρ_AB against id_A ⊗ ρ_B with μ = 2 − α, α ∈ (1, 2).
double k_conditional(const DensityOperator& rho, const Names& a, const Names& b, double alpha);

struct ContinuityReport {
    double alpha = 0.0;
    double mu = 0.0;
    double lhs_sandwiched = 0.0;
    double lhs_petz = 0.0;
    double rhs = 0.0;  // D + (α−1) ln2/2 · V + (α−1)² K
    double k = 0.0;
    double relative_entropy = 0.0;
    double variance = 0.0;

    /// D_α ≤ D'_α ≤ rhs, each up to `slack`.
    bool satisfied(double slack = 1e-9) const;
};

ContinuityReport continuity_check(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                                  double alpha, double mu);

}  // namespace qeat
