#include "qeat/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "qeat/error.hpp"

namespace qeat {

namespace {

constexpr double kPositivityTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-9;
constexpr double kDistributionTolerance = 1e-12;
constexpr double kCoherenceTolerance = 1e-10;

std::size_t product_of(const std::vector<Subsystem>& subsystems) {
    std::size_t d = 1;
    for (const auto& s : subsystems) d *= s.dim;
    return d;
}

Names default_labels(std::size_t size) {
    Names labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<Subsystem> subsystems,
                                 bool normalized)
    : matrix_(std::move(matrix)), subsystems_(std::move(subsystems)), normalized_(normalized) {
    std::set<std::string> seen;
    for (const auto& s : subsystems_) {
        if (s.dim == 0) throw Error(ErrorKind::DimensionMismatch, "subsystem " + s.name + " has dim 0");
        if (!seen.insert(s.name).second) {
            throw Error(ErrorKind::DimensionMismatch, "duplicate subsystem name " + s.name);
        }
    }
    if (product_of(subsystems_) != matrix_.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "subsystem dimensions do not match matrix size " +
                                                      std::to_string(matrix_.dim()));
    }
    const Spectrum spectrum = hermitian_eig(matrix_);
    if (spectrum.eigenvalues.back() < -kPositivityTolerance) {
        throw Error(ErrorKind::DomainError,
                    "negative eigenvalue " + std::to_string(spectrum.eigenvalues.back()));
    }
    const double tr = trace();
    if (normalized_ ? std::abs(tr - 1.0) > kTraceTolerance
                    : !(tr > 0.0 && tr <= 1.0 + kTraceTolerance)) {
        throw Error(ErrorKind::DomainError, "invalid trace " + std::to_string(tr));
    }
}

std::vector<std::size_t> DensityOperator::dims() const {
    std::vector<std::size_t> d;
    d.reserve(subsystems_.size());
    for (const auto& s : subsystems_) d.push_back(s.dim);
    return d;
}

bool DensityOperator::has(std::string_view name) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(),
                       [name](const Subsystem& s) { return s.name == name; });
}

std::size_t DensityOperator::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        if (subsystems_[i].name == name) return i;
    }
    throw Error(ErrorKind::DimensionMismatch, "no subsystem named " + std::string(name));
}

std::vector<std::size_t> DensityOperator::indices_of(std::span<const std::string> names) const {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(index_of(n));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw Error(ErrorKind::DimensionMismatch, "subsystem listed twice");
    }
    return out;
}

std::size_t DensityOperator::dim_of(std::span<const std::string> names) const {
    std::size_t d = 1;
    for (std::size_t i : indices_of(names)) d *= subsystems_[i].dim;
    return d;
}

DensityOperator DensityOperator::marginal(std::span<const std::string> names) const {
    const auto keep = indices_of(names);
    std::vector<Subsystem> kept;
    for (std::size_t i : keep) kept.push_back(subsystems_[i]);
    const auto d = dims();
    return DensityOperator(partial_trace(matrix_, d, keep), std::move(kept), normalized_);
}

ProbDist::ProbDist(Names alphabet, std::vector<double> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
    if (alphabet_.size() != weights_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "alphabet and weights differ in length");
    }
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::InvalidDistribution, "negative or non-finite weight");
        }
    }
    if (total() > 1.0 + kDistributionTolerance) {
        throw Error(ErrorKind::InvalidDistribution, "weights sum to " + std::to_string(total()));
    }
}

ProbDist::ProbDist(std::vector<double> weights) : ProbDist(default_labels(weights.size()), weights) {}

double ProbDist::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

bool ProbDist::is_normalized() const { return std::abs(total() - 1.0) <= kDistributionTolerance; }

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

DensityOperator random_density(const std::vector<Subsystem>& subsystems, std::size_t rank, Rng& rng) {
    const std::size_t d = product_of(subsystems);
    if (rank == 0 || rank > d) {
        throw Error(ErrorKind::InvalidRank,
                    "rank " + std::to_string(rank) + " for dimension " + std::to_string(d));
    }
    // Pure state on system ⊗ ancilla stored as a d × rank amplitude matrix G; ρ = G G†.
    std::vector<Complex> g(d * rank);
    for (auto& z : g) z = rng.complex_normal();
    ComplexMatrix rho(d);
    double norm = 0.0;
    for (const auto& z : g) norm += std::norm(z);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < rank; ++k) sum += g[i * rank + k] * std::conj(g[j * rank + k]);
            rho(i, j) = sum / norm;
        }
    }
    return DensityOperator(std::move(rho), subsystems);
}

DensityOperator random_density(const std::vector<Subsystem>& subsystems, std::size_t rank,
                               std::uint64_t seed) {
    Rng rng(seed);
    return random_density(subsystems, rank, rng);
}

ProbDist random_distribution(std::size_t size, Rng& rng) {
    std::vector<double> w(size);
    for (auto& x : w) x = -std::log(rng.uniform());
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    return ProbDist(std::move(w));
}

CQState random_cq_state(std::string register_name, std::size_t branches,
                        const std::vector<Subsystem>& subsystems, Rng& rng) {
    const ProbDist p = random_distribution(branches, rng);
    CQState cq{std::move(register_name), {}};
    const std::size_t d = product_of(subsystems);
    for (std::size_t x = 0; x < branches; ++x) {
        cq.branches.push_back({std::to_string(x), p[x], random_density(subsystems, d, rng)});
    }
    return cq;
}

DensityOperator bell_phi(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error(ErrorKind::DomainError, "lambda must lie in [0, 1]");
    }
    const std::vector<Complex> ket{std::sqrt(lambda), 0.0, 0.0, std::sqrt(1.0 - lambda)};
    return DensityOperator(ComplexMatrix::projector(ket), {{"A", 2}, {"B", 2}});
}

DensityOperator embed_classical(const ProbDist& p, std::string name) {
    return DensityOperator(ComplexMatrix::diagonal(p.weights()), {{std::move(name), p.size()}},
                           p.is_normalized());
}

DensityOperator product_state(const DensityOperator& a, const DensityOperator& b) {
    auto subsystems = a.subsystems();
    subsystems.insert(subsystems.end(), b.subsystems().begin(), b.subsystems().end());
    return DensityOperator(tensor_product(a.matrix(), b.matrix()), std::move(subsystems),
                           a.normalized() && b.normalized());
}

DensityOperator assemble_cq(const CQState& cq) {
    if (cq.branches.empty()) throw Error(ErrorKind::InvalidDistribution, "no branches");
    double total = 0.0;
    for (const auto& b : cq.branches) {
        if (!(b.probability >= 0.0)) throw Error(ErrorKind::InvalidDistribution, "negative weight");
        total += b.probability;
    }
    if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw Error(ErrorKind::InvalidDistribution, "branch weights sum to " + std::to_string(total));
    }
    const auto& layout = cq.branches.front().state.subsystems();
    for (const auto& b : cq.branches) {
        const auto& other = b.state.subsystems();
        const bool same = std::equal(layout.begin(), layout.end(), other.begin(), other.end(),
                                     [](const Subsystem& x, const Subsystem& y) {
                                         return x.name == y.name && x.dim == y.dim;
                                     });
        if (!same) throw Error(ErrorKind::DimensionMismatch, "branches have different layouts");
    }

    const std::size_t k = cq.branches.size();
    const std::size_t d = cq.branches.front().state.dim();
    ComplexMatrix m(k * d);
    for (std::size_t x = 0; x < k; ++x) {
        const auto& block = cq.branches[x].state.matrix();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) m(x * d + i, x * d + j) = cq.branches[x].probability * block(i, j);
        }
    }
    std::vector<Subsystem> subsystems{{cq.register_name, k}};
    subsystems.insert(subsystems.end(), layout.begin(), layout.end());
    return DensityOperator(std::move(m), std::move(subsystems));
}

CQState extract_cq(const DensityOperator& rho, std::string_view register_name) {
    const std::size_t r = rho.index_of(register_name);
    const auto dims = rho.dims();
    std::size_t stride = 1;
    for (std::size_t s = r + 1; s < dims.size(); ++s) stride *= dims[s];
    const std::size_t k = dims[r];
    const std::size_t n = rho.dim();
    const std::size_t block_dim = n / k;

    // Index of the register digit and of the remaining factors for each full index.
    std::vector<std::size_t> symbol(n), rest(n);
    for (std::size_t i = 0; i < n; ++i) {
        symbol[i] = (i / stride) % k;
        rest[i] = (i / (stride * k)) * stride + i % stride;
    }

    std::vector<ComplexMatrix> blocks(k, ComplexMatrix(block_dim));
    const auto& m = rho.matrix();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (symbol[i] == symbol[j]) {
                blocks[symbol[i]](rest[i], rest[j]) = m(i, j);
            } else if (std::abs(m(i, j)) > kCoherenceTolerance) {
                throw Error(ErrorKind::NotClassicalRegister,
                            std::string(register_name) + " carries off-diagonal coherences");
            }
        }
    }

    std::vector<Subsystem> layout;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (s != r) layout.push_back(rho.subsystems()[s]);
    }
    CQState cq{std::string(register_name), {}};
    for (std::size_t x = 0; x < k; ++x) {
        const double p = blocks[x].trace().real();
        if (p <= 1e-14) continue;
        blocks[x] *= 1.0 / p;
        cq.branches.push_back({std::to_string(x), p, DensityOperator(std::move(blocks[x]), layout)});
    }
    return cq;
}

ComplexMatrix apply_kraus(const ComplexMatrix& m, std::span<const ComplexMatrix> kraus) {
    ComplexMatrix out(m.dim());
    for (const auto& k : kraus) out += k * m * k.adjoint();
    return out;
}

std::vector<ComplexMatrix> binary_symmetric_channel(double flip) {
    if (!(flip >= 0.0 && flip <= 1.0)) throw Error(ErrorKind::DomainError, "flip must lie in [0, 1]");
    ComplexMatrix keep = ComplexMatrix::identity(2);
    keep *= std::sqrt(1.0 - flip);
    ComplexMatrix swap(2, {0.0, 1.0, 1.0, 0.0});
    swap *= std::sqrt(flip);
    return {keep, swap};
}

}  // namespace qeat
