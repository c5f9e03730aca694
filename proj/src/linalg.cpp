#include "qeat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qeat/error.hpp"

namespace qeat {

namespace {

constexpr double kJacobiTolerance = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimensions " + std::to_string(a.dim()) +
                                                      " and " + std::to_string(b.dim()));
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// Maps each full index to (kept index, traced index) for a subsystem split.
struct IndexSplit {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
    std::size_t kept_dim = 1;
};

IndexSplit split_indices(std::span<const std::size_t> dims, std::span<const std::size_t> subset,
                         std::size_t total_dim) {
    const std::size_t product =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (product != total_dim) {
        throw Error(ErrorKind::DimensionMismatch, "subsystem dimensions multiply to " +
                                                      std::to_string(product) + ", matrix has " +
                                                      std::to_string(total_dim));
    }
    std::vector<bool> selected(dims.size(), false);
    for (std::size_t s : subset) {
        if (s >= dims.size()) {
            throw Error(ErrorKind::DimensionMismatch, "subsystem index " + std::to_string(s) +
                                                          " out of range");
        }
        selected[s] = true;
    }

    IndexSplit split;
    split.kept.resize(total_dim);
    split.traced.resize(total_dim);
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (selected[s]) split.kept_dim *= dims[s];
    }
    for (std::size_t i = 0; i < total_dim; ++i) {
        std::size_t rest = i;
        std::size_t kept = 0, kept_scale = 1;
        std::size_t traced = 0, traced_scale = 1;
        // Least significant subsystem is the last one.
        for (std::size_t s = dims.size(); s-- > 0;) {
            const std::size_t digit = rest % dims[s];
            rest /= dims[s];
            if (selected[s]) {
                kept += digit * kept_scale;
                kept_scale *= dims[s];
            } else {
                traced += digit * traced_scale;
                traced_scale *= dims[s];
            }
        }
        split.kept[i] = kept;
        split.traced[i] = traced;
    }
    return split;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                        std::to_string(entries_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : entries_) sum += std::norm(z);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return defect;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
    }
    return t;
}

ComplexMatrix Spectrum::reconstruct() const {
    return matrix_func(*this, [](double x) { return x; }, false);
}

double Spectrum::support_threshold() const {
    if (eigenvalues.empty()) return 0.0;
    return kSupportCutoff * std::max(eigenvalues.front(), 0.0);
}

std::size_t Spectrum::rank() const {
    const double cut = support_threshold();
    return static_cast<std::size_t>(
        std::count_if(eigenvalues.begin(), eigenvalues.end(), [cut](double l) { return l > cut; }));
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
    if (m.hermiticity_defect() > kHermitianTolerance) {
        throw Error(ErrorKind::NotHermitian,
                    "defect " + std::to_string(m.hermiticity_defect()) + " exceeds tolerance");
    }

    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kJacobiTolerance * a.frobenius_norm();

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Late sweeps: an element below the diagonals' resolution is just roundoff.
                if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
                    std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex phase_conj = std::conj(apq / mag);

                // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]] on the (p, q) plane.
                const Complex gpp = c, gpq = s;
                const Complex gqp = -s * phase_conj, gqq = c * phase_conj;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > threshold) {
        throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded " +
                                                  std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix matrix_func(const Spectrum& spectrum, const ScalarFunction& f, bool support_only) {
    const std::size_t n = spectrum.eigenvalues.size();
    const double cut = spectrum.support_threshold();
    std::vector<double> mapped(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = spectrum.eigenvalues[k];
        if (support_only && !(lambda > cut)) continue;
        mapped[k] = f(lambda);
        if (!std::isfinite(mapped[k])) {
            throw Error(ErrorKind::DomainError,
                        "function not finite at eigenvalue " + std::to_string(lambda));
        }
    }
    const ComplexMatrix& u = spectrum.eigenvectors;
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (mapped[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex uik = u(i, k) * mapped[k];
            for (std::size_t j = 0; j < n; ++j) out(i, j) += uik * std::conj(u(j, k));
        }
    }
    return out;
}

ComplexMatrix matrix_func(const ComplexMatrix& m, const ScalarFunction& f, bool support_only) {
    return matrix_func(hermitian_eig(m), f, support_only);
}

ComplexMatrix log2_on_support(const Spectrum& spectrum) {
    return matrix_func(spectrum, [](double x) { return std::log2(x); }, true);
}

ComplexMatrix power_on_support(const Spectrum& spectrum, double exponent) {
    return matrix_func(spectrum, [exponent](double x) { return std::pow(x, exponent); }, true);
}

ComplexMatrix support_projector(const Spectrum& spectrum) {
    return matrix_func(spectrum, [](double) { return 1.0; }, true);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    const IndexSplit split = split_indices(dims, keep, m.dim());
    ComplexMatrix out(split.kept_dim);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (split.traced[i] == split.traced[j]) out(split.kept[i], split.kept[j]) += m(i, j);
        }
    }
    return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> dims,
                             std::span<const std::size_t> on) {
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    const IndexSplit split = split_indices(dims, on, total);
    if (split.kept_dim != op.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension " + std::to_string(op.dim()) +
                                                      " does not match subsystems (" +
                                                      std::to_string(split.kept_dim) + ")");
    }
    ComplexMatrix out(total);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.traced[i] == split.traced[j]) out(i, j) = op(split.kept[i], split.kept[j]);
        }
    }
    return out;
}

}  // namespace qeat
