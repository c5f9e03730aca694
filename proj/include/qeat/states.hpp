#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qeat/linalg.hpp"

namespace qeat {

using Names = std::vector<std::string>;

struct Subsystem {
    std::string name;
    std::size_t dim = 1;
};

/// Positive semidefinite operator with labelled tensor factors. Either normalized
/// (trace 1) or subnormalized (0 < trace ≤ 1).
class DensityOperator {
public:
    /// Validates hermiticity, positivity and trace; throws NotHermitian / DomainError /
    /// DimensionMismatch.
    DensityOperator(ComplexMatrix matrix, std::vector<Subsystem> subsystems, bool normalized = true);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<Subsystem>& subsystems() const noexcept { return subsystems_; }
    bool normalized() const noexcept { return normalized_; }

    std::size_t dim() const noexcept { return matrix_.dim(); }
    std::vector<std::size_t> dims() const;
    double trace() const { return matrix_.trace().real(); }
    double purity() const { return trace_of_product(matrix_, matrix_).real(); }

    bool has(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;
    /// Subsystem positions for `names`, sorted in tensor order.
    std::vector<std::size_t> indices_of(std::span<const std::string> names) const;
    /// Product dimension of the named subsystems.
    std::size_t dim_of(std::span<const std::string> names) const;

    /// Reduced state on `names`; factors keep their original relative order.
    DensityOperator marginal(std::span<const std::string> names) const;

private:
    ComplexMatrix matrix_;
    std::vector<Subsystem> subsystems_;
    bool normalized_;
};

/// Finite weights over a labelled alphabet; sums to at most one.
class ProbDist {
public:
    ProbDist(Names alphabet, std::vector<double> weights);
    /// Labels "0", "1", … .
    explicit ProbDist(std::vector<double> weights);

    const Names& alphabet() const noexcept { return alphabet_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    double total() const;
    bool is_normalized() const;

private:
    Names alphabet_;
    std::vector<double> weights_;
};

struct CQBranch {
    std::string symbol;
    double probability = 0.0;
    DensityOperator state;
};

/// Σ_x p_x |x⟩⟨x|_X ⊗ ρ(x).
struct CQState {
    std::string register_name;
    std::vector<CQBranch> branches;
};

/// splitmix64; fixed recurrence so seeded output is reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform on (0, 1].
    double uniform();
    /// Standard normal via Box–Muller.
    double normal();
    Complex complex_normal();

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Trace of a random pure state on system ⊗ C^rank over the ancilla.
DensityOperator random_density(const std::vector<Subsystem>& subsystems, std::size_t rank, Rng& rng);
DensityOperator random_density(const std::vector<Subsystem>& subsystems, std::size_t rank,
                               std::uint64_t seed);

/// Uniform sample from the probability simplex.
ProbDist random_distribution(std::size_t size, Rng& rng);

/// Random cq-state with `branches` symbols, each branch of full rank on `subsystems`.
CQState random_cq_state(std::string register_name, std::size_t branches,
                        const std::vector<Subsystem>& subsystems, Rng& rng);

/// |Φ(λ)⟩ = √λ|00⟩ + √(1−λ)|11⟩ on subsystems A, B.
DensityOperator bell_phi(double lambda);

DensityOperator embed_classical(const ProbDist& p, std::string name = "X");

DensityOperator product_state(const DensityOperator& a, const DensityOperator& b);

/// Block-diagonal Σ_x p_x |x⟩⟨x| ⊗ ρ(x), register as the first subsystem.
DensityOperator assemble_cq(const CQState& cq);

/// Inverse of assemble_cq for a register at any position. Zero-weight branches are dropped.
/// Throws NotClassicalRegister if coherences between register values exceed 1e-10.
CQState extract_cq(const DensityOperator& rho, std::string_view register_name);

ComplexMatrix apply_kraus(const ComplexMatrix& m, std::span<const ComplexMatrix> kraus);

/// Kraus operators of a bit flip with probability `flip` in the computational basis.
std::vector<ComplexMatrix> binary_symmetric_channel(double flip);

}  // namespace qeat
