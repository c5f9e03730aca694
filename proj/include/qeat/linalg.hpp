#pragma once

// Dense complex linear algebra for small Hilbert spaces (dimension up to ~64).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qeat {

using Complex = std::complex<double>;

/// Tolerance on ‖m − m†‖_max for a matrix to count as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

/// Eigenvalue λ is in the support iff λ > kSupportCutoff · λ_max.
inline constexpr double kSupportCutoff = 1e-12;

/// Square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |ψ⟩⟨ψ| for an (unnormalized) ket.
    static ComplexMatrix projector(std::span<const Complex> ket);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    Complex trace() const;
    ComplexMatrix adjoint() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// ‖m − m†‖_max
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// max |a_ij − b_ij|; throws DimensionMismatch on differing sizes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a·b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns

    ComplexMatrix reconstruct() const;
    double support_threshold() const;
    /// Number of eigenvalues above the support threshold.
    std::size_t rank() const;
};

/// Cyclic complex Jacobi. Throws NotHermitian / NoConvergence.
Spectrum hermitian_eig(const ComplexMatrix& m);

using ScalarFunction = std::function<double(double)>;

/// U f(Λ) U†. With support_only, eigenvalues at or below the support threshold map to 0.
/// Without it, a non-finite f(λ) raises DomainError.
ComplexMatrix matrix_func(const ComplexMatrix& m, const ScalarFunction& f, bool support_only);
ComplexMatrix matrix_func(const Spectrum& spectrum, const ScalarFunction& f, bool support_only);

ComplexMatrix log2_on_support(const Spectrum& spectrum);
ComplexMatrix power_on_support(const Spectrum& spectrum, double exponent);
ComplexMatrix support_projector(const Spectrum& spectrum);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the subsystems listed in `keep`, in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Inverse of partial_trace's layout: `op` acts on the subsystems `on` (original order),
/// identity elsewhere.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> dims,
                             std::span<const std::size_t> on);

}  // namespace qeat
