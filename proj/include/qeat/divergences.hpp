#pragma once

// Quantum relative entropies and conditional entropies. Values are in bits; +infinity
// encodes a failed support condition.

#include <limits>
#include <utility>

#include "qeat/linalg.hpp"
#include "qeat/states.hpp"

namespace qeat {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Orders α within this distance of 1 are evaluated as α = 1.
inline constexpr double kAlphaOneWindow = 1e-6;

/// D(ρ‖σ) = tr[ρ(log ρ − log σ)] / tr ρ.
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Sandwiched D_α for α ∈ [1/2, ∞]; pass kInfinity for D_max.
double sandwiched_renyi(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha);

/// Petz D'_α for α ∈ [0, 2].
double petz_renyi(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha);

/// Petz D'_α for any finite α ≥ 0. The continuity remainder needs orders above 2.
double petz_renyi_any_order(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha);

double classical_relative_entropy(const ProbDist& p, const ProbDist& q);
/// Classical Rényi divergence for α ∈ [0, ∞], same case split as the quantum versions.
double classical_renyi(const ProbDist& p, const ProbDist& q, double alpha);
/// Variance of log(p/q) under p/Σp; requires supp p ⊆ supp q.
double classical_divergence_variance(const ProbDist& p, const ProbDist& q);

/// P(x,y) = λ_x |⟨e_x|f_y⟩|²,  Q(x,y) = μ_y |⟨e_x|f_y⟩|², flattened as x·d + y.
std::pair<ProbDist, ProbDist> nussbaum_szkola(const ComplexMatrix& rho, const ComplexMatrix& sigma);

enum class EntropyVariant { Sandwiched, Petz, Up };

/// A state on AB (subsystems in their original order) and the reference operator it is
/// compared against.
struct ReferencePair {
    DensityOperator rho;
    ComplexMatrix reference;
};

/// (ρ_AB, id_A ⊗ ρ_B). B may be empty.
ReferencePair conditional_pair(const DensityOperator& rho, const Names& a, const Names& b);
/// (ρ_AB, ρ_A ⊗ ρ_B).
ReferencePair mutual_pair(const DensityOperator& rho, const Names& a, const Names& b);

double von_neumann_entropy(const DensityOperator& rho);

/// H_α(A|B), H'_α(A|B) or H↑_α(A|B). Any variant at α = 1 gives H(A|B).
double cond_entropy(const DensityOperator& rho, const Names& a, const Names& b, double alpha,
                    EntropyVariant variant);

/// Result of the H↑ optimization over σ_B.
struct UpEntropyResult {
    double value;
    ComplexMatrix sigma_b;
    int iterations;
};

/// H↑_α(A|B) for α ∈ [1/2, 1) ∪ (1, ∞). Throws NoConvergence after 500 iterations.
UpEntropyResult cond_entropy_up(const DensityOperator& rho, const Names& a, const Names& b,
                                double alpha);

/// Purified distance between subnormalized states.
double purified_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace qeat
