#include "qeat/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qeat/error.hpp"

namespace qeat {

namespace {

constexpr double kNegativeTolerance = 1e-10;
// Weight of ρ outside supp(σ), relative to tr ρ, that still counts as contained.
constexpr double kLeakageTolerance = 1e-10;
constexpr int kUpIterationCap = 500;
constexpr double kUpTolerance = 1e-10;

bool near_one(double alpha) { return std::abs(alpha - 1.0) < kAlphaOneWindow; }

ComplexMatrix hermitize(const ComplexMatrix& m) {
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

Spectrum psd_spectrum(const ComplexMatrix& m, const char* what) {
    Spectrum s = hermitian_eig(m);
    if (!s.eigenvalues.empty() && s.eigenvalues.back() < -kNegativeTolerance) {
        throw Error(ErrorKind::DomainError, std::string(what) + " is not positive semidefinite");
    }
    return s;
}

double positive_trace(const Spectrum& s) {
    double t = 0.0;
    for (double x : s.eigenvalues) t += std::max(x, 0.0);
    return t;
}

// tr[ρ Π_σ]
double overlap_with_support(const ComplexMatrix& rho, const Spectrum& sigma) {
    return trace_of_product(rho, support_projector(sigma)).real();
}

bool support_contained(const ComplexMatrix& rho, double tr_rho, const Spectrum& sigma) {
    return tr_rho - overlap_with_support(rho, sigma) <= kLeakageTolerance * tr_rho;
}

bool orthogonal(const ComplexMatrix& rho, double tr_rho, const Spectrum& sigma) {
    return overlap_with_support(rho, sigma) <= kLeakageTolerance * tr_rho;
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operands have dimensions " +
                                                      std::to_string(a.dim()) + " and " +
                                                      std::to_string(b.dim()));
    }
}

double sum_of_powers(const Spectrum& s, double exponent) {
    const double cut = s.support_threshold();
    double q = 0.0;
    for (double x : s.eigenvalues) {
        if (x > cut) q += std::pow(x, exponent);
    }
    return q;
}

double petz_quasi(const Spectrum& rs, const Spectrum& ss, double alpha) {
    return trace_of_product(power_on_support(rs, alpha), power_on_support(ss, 1.0 - alpha)).real();
}

void check_alpha_not_nan(double alpha) {
    if (std::isnan(alpha)) throw Error(ErrorKind::AlphaOutOfRange, "alpha is NaN");
}

std::string alpha_text(double alpha) { return "alpha = " + std::to_string(alpha); }

double classical_support_cut(std::span<const double> w) {
    const double m = w.empty() ? 0.0 : *std::max_element(w.begin(), w.end());
    return kSupportCutoff * m;
}

void check_same_size(const ProbDist& p, const ProbDist& q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimensionMismatch, "distributions have different alphabets");
    }
}

Names joined(const Names& a, const Names& b) {
    std::set<std::string> seen(a.begin(), a.end());
    if (a.empty()) throw Error(ErrorKind::DimensionMismatch, "conditioned system is empty");
    if (seen.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "repeated subsystem");
    Names all = a;
    for (const auto& n : b) {
        if (!seen.insert(n).second) {
            throw Error(ErrorKind::DimensionMismatch, "subsystem " + n + " listed twice");
        }
        all.push_back(n);
    }
    return all;
}

}  // namespace

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    check_same_dim(rho, sigma);
    const Spectrum rs = psd_spectrum(rho, "rho");
    const Spectrum ss = psd_spectrum(sigma, "sigma");
    const double tr = positive_trace(rs);
    if (tr <= 0.0) throw Error(ErrorKind::DomainError, "rho has zero trace");
    if (!support_contained(rho, tr, ss)) return kInfinity;

    const double cut = rs.support_threshold();
    double rho_log_rho = 0.0;
    for (double x : rs.eigenvalues) {
        if (x > cut) rho_log_rho += x * std::log2(x);
    }
    const double rho_log_sigma = trace_of_product(rho, log2_on_support(ss)).real();
    return (rho_log_rho - rho_log_sigma) / tr;
}

double sandwiched_renyi(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha) {
    check_alpha_not_nan(alpha);
    if (alpha < 0.5) throw Error(ErrorKind::AlphaOutOfRange, alpha_text(alpha) + " below 1/2");
    if (near_one(alpha)) return relative_entropy(rho, sigma);
    check_same_dim(rho, sigma);

    const Spectrum rs = psd_spectrum(rho, "rho");
    const Spectrum ss = psd_spectrum(sigma, "sigma");
    const double tr = positive_trace(rs);
    if (tr <= 0.0) throw Error(ErrorKind::DomainError, "rho has zero trace");

    if (std::isinf(alpha)) {
        if (!support_contained(rho, tr, ss)) return kInfinity;
        const ComplexMatrix s = power_on_support(ss, -0.5);
        const Spectrum m = hermitian_eig(hermitize(s * rho * s));
        return std::log2(m.eigenvalues.front());
    }

    if (alpha > 1.0 ? !support_contained(rho, tr, ss) : orthogonal(rho, tr, ss)) return kInfinity;
    const ComplexMatrix s = power_on_support(ss, (1.0 - alpha) / (2.0 * alpha));
    const Spectrum m = hermitian_eig(hermitize(s * rho * s));
    return std::log2(sum_of_powers(m, alpha) / tr) / (alpha - 1.0);
}

double petz_renyi_any_order(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha) {
    check_alpha_not_nan(alpha);
    if (alpha < 0.0 || std::isinf(alpha)) {
        throw Error(ErrorKind::AlphaOutOfRange, alpha_text(alpha));
    }
    if (near_one(alpha)) return relative_entropy(rho, sigma);
    check_same_dim(rho, sigma);

    const Spectrum rs = psd_spectrum(rho, "rho");
    const Spectrum ss = psd_spectrum(sigma, "sigma");
    const double tr = positive_trace(rs);
    if (tr <= 0.0) throw Error(ErrorKind::DomainError, "rho has zero trace");
    if (alpha > 1.0 ? !support_contained(rho, tr, ss) : orthogonal(rho, tr, ss)) return kInfinity;
    return std::log2(petz_quasi(rs, ss, alpha) / tr) / (alpha - 1.0);
}

double petz_renyi(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha) {
    check_alpha_not_nan(alpha);
    if (alpha < 0.0 || alpha > 2.0) {
        throw Error(ErrorKind::AlphaOutOfRange, alpha_text(alpha) + " outside [0, 2]");
    }
    return petz_renyi_any_order(rho, sigma, alpha);
}

double classical_relative_entropy(const ProbDist& p, const ProbDist& q) {
    return classical_renyi(p, q, 1.0);
}

double classical_renyi(const ProbDist& p, const ProbDist& q, double alpha) {
    check_alpha_not_nan(alpha);
    if (alpha < 0.0) throw Error(ErrorKind::AlphaOutOfRange, alpha_text(alpha));
    check_same_size(p, q);
    const double pcut = classical_support_cut(p.weights());
    const double qcut = classical_support_cut(q.weights());
    const double total = p.total();
    if (total <= 0.0) throw Error(ErrorKind::DomainError, "p has zero mass");

    bool contained = true;
    bool overlapping = false;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x] <= pcut) continue;
        if (q[x] > qcut) {
            overlapping = true;
        } else {
            contained = false;
        }
    }

    if (near_one(alpha)) {
        if (!contained) return kInfinity;
        double d = 0.0;
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (p[x] > pcut) d += p[x] * std::log2(p[x] / q[x]);
        }
        return d / total;
    }
    if (alpha > 1.0 ? !contained : !overlapping) return kInfinity;

    if (std::isinf(alpha)) {
        double best = -kInfinity;
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (p[x] > pcut) best = std::max(best, std::log2(p[x] / q[x]));
        }
        return best;
    }

    double sum = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x] <= pcut || q[x] <= qcut) continue;
        sum += std::pow(p[x], alpha) * std::pow(q[x], 1.0 - alpha);
    }
    return std::log2(sum / total) / (alpha - 1.0);
}

double classical_divergence_variance(const ProbDist& p, const ProbDist& q) {
    check_same_size(p, q);
    const double d = classical_relative_entropy(p, q);
    if (std::isinf(d)) throw Error(ErrorKind::SupportViolation, "supp p is not inside supp q");
    const double pcut = classical_support_cut(p.weights());
    double second = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p[x] <= pcut) continue;
        const double l = std::log2(p[x] / q[x]) - d;
        second += p[x] * l * l;
    }
    const double v = second / p.total();
    return (v < 0.0 && v >= -1e-9) ? 0.0 : v;
}

std::pair<ProbDist, ProbDist> nussbaum_szkola(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    check_same_dim(rho, sigma);
    const Spectrum rs = psd_spectrum(rho, "rho");
    const Spectrum ss = psd_spectrum(sigma, "sigma");
    const std::size_t d = rho.dim();
    std::vector<double> p(d * d), q(d * d);
    for (std::size_t x = 0; x < d; ++x) {
        const double lambda = std::max(rs.eigenvalues[x], 0.0);
        for (std::size_t y = 0; y < d; ++y) {
            const double mu = std::max(ss.eigenvalues[y], 0.0);
            Complex inner = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                inner += std::conj(rs.eigenvectors(k, x)) * ss.eigenvectors(k, y);
            }
            const double overlap = std::norm(inner);
            p[x * d + y] = lambda * overlap;
            q[x * d + y] = mu * overlap;
        }
    }
    return {ProbDist(std::move(p)), ProbDist(std::move(q))};
}

ReferencePair conditional_pair(const DensityOperator& rho, const Names& a, const Names& b) {
    const DensityOperator ab = rho.marginal(joined(a, b));
    const DensityOperator rho_b = ab.marginal(b);
    const auto dims = ab.dims();
    ComplexMatrix reference = embed_operator(rho_b.matrix(), dims, ab.indices_of(b));
    return {ab, std::move(reference)};
}

ReferencePair mutual_pair(const DensityOperator& rho, const Names& a, const Names& b) {
    if (b.empty()) throw Error(ErrorKind::DimensionMismatch, "mutual information needs a nonempty B");
    const DensityOperator ab = rho.marginal(joined(a, b));
    const auto dims = ab.dims();
    ComplexMatrix ra = embed_operator(ab.marginal(a).matrix(), dims, ab.indices_of(a));
    ComplexMatrix rb = embed_operator(ab.marginal(b).matrix(), dims, ab.indices_of(b));
    ComplexMatrix reference = hermitize(ra * rb);
    reference *= 1.0 / ab.trace();
    return {ab, std::move(reference)};
}

double von_neumann_entropy(const DensityOperator& rho) {
    const Spectrum s = hermitian_eig(rho.matrix());
    const double cut = s.support_threshold();
    double h = 0.0;
    for (double x : s.eigenvalues) {
        if (x > cut) h -= x * std::log2(x);
    }
    return h;
}

double cond_entropy(const DensityOperator& rho, const Names& a, const Names& b, double alpha,
                    EntropyVariant variant) {
    check_alpha_not_nan(alpha);
    if (variant == EntropyVariant::Up && !near_one(alpha)) {
        return cond_entropy_up(rho, a, b, alpha).value;
    }
    const ReferencePair pair = conditional_pair(rho, a, b);
    switch (variant) {
        case EntropyVariant::Sandwiched:
            return -sandwiched_renyi(pair.rho.matrix(), pair.reference, alpha);
        case EntropyVariant::Petz:
            return -petz_renyi(pair.rho.matrix(), pair.reference, alpha);
        case EntropyVariant::Up:
            break;
    }
    return -relative_entropy(pair.rho.matrix(), pair.reference);
}

UpEntropyResult cond_entropy_up(const DensityOperator& rho, const Names& a, const Names& b,
                                double alpha) {
    check_alpha_not_nan(alpha);
    if (alpha < 0.5 || std::isinf(alpha)) {
        throw Error(ErrorKind::AlphaOutOfRange, alpha_text(alpha) + " unsupported for H-up");
    }
    const ReferencePair pair = conditional_pair(rho, a, b);
    const ComplexMatrix& rho_ab = pair.rho.matrix();
    const DensityOperator rho_b = pair.rho.marginal(b);
    if (near_one(alpha)) {
        return {-relative_entropy(rho_ab, pair.reference), rho_b.matrix(), 0};
    }
    if (b.empty()) {
        const ComplexMatrix id = ComplexMatrix::identity(rho_ab.dim());
        return {-sandwiched_renyi(rho_ab, id, alpha), ComplexMatrix::identity(1), 0};
    }

    const auto dims = pair.rho.dims();
    const auto on_b = pair.rho.indices_of(b);
    const double tr = pair.rho.trace();
    const double gamma = (1.0 - alpha) / (2.0 * alpha);

    // Stationary points of σ ↦ D_α(ρ_AB‖id_A⊗σ) satisfy σ ∝ T(σ) with
    // T(σ) = tr_A[(σ^γ ρ σ^γ)^α]. The update σ^{-γ} T(σ)^{1/α} σ^{-γ} has the same fixed
    // points and solves the commuting case in a single step.
    ComplexMatrix sigma = rho_b.matrix();
    sigma *= 1.0 / rho_b.trace();
    double best = kInfinity;
    ComplexMatrix best_sigma = sigma;
    double previous = kInfinity;
    for (int iteration = 1; iteration <= kUpIterationCap; ++iteration) {
        const Spectrum ss = hermitian_eig(sigma);
        const ComplexMatrix s = embed_operator(power_on_support(ss, gamma), dims, on_b);
        const Spectrum inner = hermitian_eig(hermitize(s * rho_ab * s));
        const ComplexMatrix t = hermitize(partial_trace(power_on_support(inner, alpha), dims, on_b));
        const double d = std::log2(t.trace().real() / tr) / (alpha - 1.0);
        if (d < best) {
            best = d;
            best_sigma = sigma;
        }
        if (std::abs(d - previous) < kUpTolerance) return {-best, best_sigma, iteration};
        previous = d;

        const ComplexMatrix damp = power_on_support(ss, -gamma);
        const ComplexMatrix root = power_on_support(hermitian_eig(t), 1.0 / alpha);
        sigma = hermitize(damp * root * damp);
        sigma *= 1.0 / sigma.trace().real();
    }
    throw Error(ErrorKind::NoConvergence,
                "H-up iteration did not settle within " + std::to_string(kUpIterationCap) + " steps");
}

double purified_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    check_same_dim(rho, sigma);
    const Spectrum ss = psd_spectrum(sigma, "sigma");
    psd_spectrum(rho, "rho");
    const ComplexMatrix root = power_on_support(ss, 0.5);
    const Spectrum m = hermitian_eig(hermitize(root * rho * root));
    double fidelity = 0.0;
    for (double x : m.eigenvalues) fidelity += std::sqrt(std::max(x, 0.0));
    const double deficit = std::max(0.0, (1.0 - rho.trace().real()) * (1.0 - sigma.trace().real()));
    const double generalized = fidelity + std::sqrt(deficit);
    return std::sqrt(std::clamp(1.0 - generalized * generalized, 0.0, 1.0));
}

}  // namespace qeat
