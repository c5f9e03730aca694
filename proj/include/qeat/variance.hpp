#pragma once

// Divergence variance V(ρ‖σ) in bits² and its structural identities.

#include <string>
#include <vector>

#include "qeat/linalg.hpp"
#include "qeat/states.hpp"

namespace qeat {

/// tr[ρ(log ρ − log σ)²]/tr ρ − D(ρ‖σ)². Throws SupportViolation if D is infinite.
double divergence_variance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// V(ρ_AB ‖ id_A ⊗ ρ_B).
double cond_entropy_variance(const DensityOperator& rho, const Names& a, const Names& b);
/// V(ρ_AB ‖ ρ_A ⊗ ρ_B).
double mutual_info_variance(const DensityOperator& rho, const Names& a, const Names& b);

/// v(q) = q(1−q) log²(q/(1−q)); zero at the endpoints.
double bernoulli_entropy_variance(double q);

/// (1/ν²) log²(2^{ν(D'_{1+ν} − D)} + 2^{ν(D − D'_{1−ν})} + 1) for ν ∈ (0, 1).
double variance_upper_bound(const ComplexMatrix& rho, const ComplexMatrix& sigma, double nu);

enum class VarianceKind { Conditional, Mutual };

double dimension_bound(std::size_t d_a, VarianceKind kind, bool classical_a);

struct BranchVariance {
    std::string symbol;
    double probability = 0.0;
    double variance = 0.0;
};

struct VarianceDecomposition {
    std::vector<BranchVariance> per_branch;
    double spread_term = 0.0;  // Var(W) with W = H(A|B, X=x)
    double total = 0.0;

    double branch_average() const;
};

/// V(A|BX) split into branch variances and the spread of branch entropies.
VarianceDecomposition classical_x_decompose(const CQState& cq, const Names& a, const Names& b);
VarianceDecomposition classical_x_decompose(const DensityOperator& rho, const Names& a,
                                            const Names& b, const std::string& register_name);

struct ChainRuleTerms {
    double v_ac_given_b = 0.0;
    double v_a_given_b = 0.0;
    double v_c_given_ba = 0.0;
    double cross = 0.0;

    /// V(AC|B) − V(A|B) − V(C|BA) − cross.
    double residual() const { return v_ac_given_b - v_a_given_b - v_c_given_ba - cross; }
};

/// The three conditional variances and the symmetrized covariance of the two
/// centred log-ratio operators that add up to the AC|B one.
ChainRuleTerms chain_rule_cross_terms(const DensityOperator& rho, const Names& a, const Names& b,
                                      const Names& c);

}  // namespace qeat
