#include <doctest.h>

#include <cmath>
#include <functional>

#include "qeat/divergences.hpp"
#include "qeat/error.hpp"

using namespace qeat;

namespace {

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(d); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::DomainError;
}

// Rényi entropy of a probability vector, computed directly.
double renyi_entropy(const std::vector<double>& p, double alpha) {
    double s = 0.0;
    for (double x : p) s += std::pow(x, alpha);
    return std::log2(s) / (1.0 - alpha);
}

}  // namespace

TEST_CASE("relative entropy of a state with itself vanishes") {
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const ComplexMatrix rho = random_density({{"A", 3}}, 1 + t % 3, rng).matrix();
        CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
        CHECK(sandwiched_renyi(rho, rho, 1.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
        CHECK(petz_renyi(rho, rho, 0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    }
}

TEST_CASE("relative entropy of two biased bits") {
    // 0.5 log(0.5/0.25) + 0.5 log(0.5/0.75) = 1 - log2(3)/2
    const double expected = 1.0 - 0.5 * std::log2(3.0);
    CHECK(relative_entropy(diag({0.5, 0.5}), diag({0.25, 0.75})) == doctest::Approx(expected));
    CHECK(classical_relative_entropy(ProbDist(std::vector<double>{0.5, 0.5}),
                                     ProbDist(std::vector<double>{0.25, 0.75})) == doctest::Approx(expected));
}

TEST_CASE("against the maximally mixed state D equals log d minus the entropy") {
    Rng rng(2);
    const DensityOperator rho = random_density({{"A", 4}}, 2, rng);
    CHECK(relative_entropy(rho.matrix(), ComplexMatrix::identity(4) * 0.25) ==
          doctest::Approx(2.0 - von_neumann_entropy(rho)));
}

TEST_CASE("von Neumann entropy of simple states") {
    CHECK(von_neumann_entropy(DensityOperator(ComplexMatrix::identity(4) * 0.25, {{"A", 4}})) ==
          doctest::Approx(2.0));
    CHECK(von_neumann_entropy(bell_phi(0.5)) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("support violations give infinity") {
    const ComplexMatrix zero = diag({1.0, 0.0}), one = diag({0.0, 1.0});
    CHECK(relative_entropy(zero, one) == kInfinity);
    CHECK(sandwiched_renyi(zero, one, 2.0) == kInfinity);
    CHECK(sandwiched_renyi(zero, one, 0.5) == kInfinity);
    CHECK(sandwiched_renyi(zero, one, kInfinity) == kInfinity);
    CHECK(petz_renyi(zero, one, 0.5) == kInfinity);
    CHECK(petz_renyi(zero, one, 1.5) == kInfinity);
}

TEST_CASE("partial overlap below one is finite and above one is infinite") {
    const ComplexMatrix rho = diag({0.5, 0.5}), sigma = diag({1.0, 0.0});
    CHECK(petz_renyi(rho, sigma, 0.5) == doctest::Approx(1.0));  // -2 log(sqrt(0.5))
    CHECK(petz_renyi(rho, sigma, 1.5) == kInfinity);
    CHECK(relative_entropy(rho, sigma) == kInfinity);
}

TEST_CASE("order one half of pure states is minus log fidelity") {
    const std::vector<Complex> psi{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const std::vector<Complex> phi{Complex(std::sqrt(0.3), 0.0), Complex(0.0, std::sqrt(0.7))};
    const ComplexMatrix a = ComplexMatrix::projector(psi);
    ComplexMatrix b = ComplexMatrix::projector(phi);
    b = 0.9 * b + 0.1 * ComplexMatrix::projector(std::vector<Complex>{0.0, 1.0});
    // F(ψ, σ) = ⟨ψ|σ|ψ⟩ = 0.9 * 0.3 for pure ψ.
    CHECK(sandwiched_renyi(a, b, 0.5) == doctest::Approx(-std::log2(0.27)));
}

TEST_CASE("max divergence of commuting states") {
    CHECK(sandwiched_renyi(diag({1.0, 0.0}), diag({0.5, 0.5}), kInfinity) == doctest::Approx(1.0));
    CHECK(sandwiched_renyi(diag({0.2, 0.8}), diag({0.6, 0.4}), kInfinity) == doctest::Approx(1.0));
}

TEST_CASE("commuting inputs reproduce the classical Rényi divergence") {
    const std::vector<double> p{0.1, 0.3, 0.6}, q{0.3, 0.3, 0.4};
    const ProbDist pp(p), qq(q);
    for (double alpha : {0.5, 0.9, 1.0, 1.3, 2.0}) {
        const double c = classical_renyi(pp, qq, alpha);
        CHECK(sandwiched_renyi(diag(p), diag(q), alpha) == doctest::Approx(c));
        CHECK(petz_renyi(diag(p), diag(q), alpha) == doctest::Approx(c));
    }
    double expected = 0.0;
    for (std::size_t i = 0; i < 3; ++i) expected += p[i] * p[i] / q[i];
    CHECK(classical_renyi(pp, qq, 2.0) == doctest::Approx(std::log2(expected)));
}

TEST_CASE("sandwiched is below Petz and both grow with alpha") {
    Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        const ComplexMatrix rho = random_density({{"A", 3}}, 2, rng).matrix();
        const ComplexMatrix sigma = random_density({{"A", 3}}, 3, rng).matrix();
        double prev_s = -kInfinity, prev_p = -kInfinity;
        for (double alpha : {0.5, 0.8, 1.0, 1.2, 1.6, 2.0}) {
            const double s = sandwiched_renyi(rho, sigma, alpha);
            const double p = petz_renyi(rho, sigma, alpha);
            CHECK(s <= p + 1e-9);
            CHECK(s >= prev_s - 1e-9);
            CHECK(p >= prev_p - 1e-9);
            prev_s = s;
            prev_p = p;
        }
        CHECK(sandwiched_renyi(rho, sigma, kInfinity) >= prev_s - 1e-9);
    }
}

TEST_CASE("orders near one use the relative entropy") {
    Rng rng(4);
    const ComplexMatrix rho = random_density({{"A", 2}}, 2, rng).matrix();
    const ComplexMatrix sigma = random_density({{"A", 2}}, 2, rng).matrix();
    const double d = relative_entropy(rho, sigma);
    CHECK(sandwiched_renyi(rho, sigma, 1.0 + 1e-7) == d);
    CHECK(petz_renyi(rho, sigma, 1.0 - 1e-7) == d);
    CHECK(sandwiched_renyi(rho, sigma, 1.0 + 1e-4) == doctest::Approx(d).epsilon(1e-3));
}

TEST_CASE("subnormalized inputs divide by the trace of rho") {
    // tr[ρ(log ρ − log σ)] / tr ρ with ρ = diag(1/4, 1/4): the average of log(1) and log(1/3).
    const ComplexMatrix rho = diag({0.25, 0.25}), sigma = diag({0.25, 0.75});
    CHECK(relative_entropy(rho, sigma) == doctest::Approx(-0.5 * std::log2(3.0)));
}

TEST_CASE("order ranges") {
    const ComplexMatrix rho = diag({0.5, 0.5});
    CHECK(kind_of([&] { sandwiched_renyi(rho, rho, 0.4); }) == ErrorKind::AlphaOutOfRange);
    CHECK(kind_of([&] { petz_renyi(rho, rho, 2.5); }) == ErrorKind::AlphaOutOfRange);
    CHECK(kind_of([&] { petz_renyi(rho, rho, -0.1); }) == ErrorKind::AlphaOutOfRange);
    CHECK(kind_of([&] { sandwiched_renyi(rho, rho, std::nan("")); }) == ErrorKind::AlphaOutOfRange);
    CHECK(petz_renyi_any_order(diag({0.2, 0.8}), diag({0.5, 0.5}), 3.0) ==
          doctest::Approx(std::log2(0.008 * 4 + 0.512 * 4) / 2.0));
    CHECK(kind_of([&] { relative_entropy(rho, ComplexMatrix::identity(3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("Nussbaum-Szkola distributions reproduce D and Petz divergences") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const ComplexMatrix rho = random_density({{"A", 3}}, 3, rng).matrix();
        const ComplexMatrix sigma = random_density({{"A", 3}}, 3, rng).matrix();
        const auto [p, q] = nussbaum_szkola(rho, sigma);
        CHECK(p.size() == 9);
        CHECK(p.total() == doctest::Approx(1.0));
        CHECK(classical_relative_entropy(p, q) == doctest::Approx(relative_entropy(rho, sigma)));
        for (double alpha : {0.3, 0.7, 1.5, 2.0}) {
            CHECK(classical_renyi(p, q, alpha) == doctest::Approx(petz_renyi(rho, sigma, alpha)));
        }
    }
}

TEST_CASE("maximally entangled qubits have conditional entropy minus one at every order") {
    const DensityOperator phi = bell_phi(0.5);
    const Names a{"A"}, b{"B"};
    for (double alpha : {0.5, 0.8, 1.0, 1.5, 2.0}) {
        CHECK(cond_entropy(phi, a, b, alpha, EntropyVariant::Sandwiched) == doctest::Approx(-1.0));
        CHECK(cond_entropy(phi, a, b, alpha, EntropyVariant::Up) == doctest::Approx(-1.0));
    }
    for (double alpha : {0.5, 1.5, 2.0}) CHECK(cond_entropy(phi, a, b, alpha, EntropyVariant::Petz) == doctest::Approx(-1.0));
}

TEST_CASE("product states condition trivially") {
    Rng rng(6);
    const DensityOperator ra = random_density({{"A", 2}}, 2, rng);
    const DensityOperator rb = random_density({{"B", 3}}, 2, rng);
    const DensityOperator ab = product_state(ra, rb);
    const Names a{"A"}, b{"B"}, none{};
    for (double alpha : {0.6, 1.0, 1.4}) {
        for (EntropyVariant v : {EntropyVariant::Sandwiched, EntropyVariant::Petz}) {
            CHECK(cond_entropy(ab, a, b, alpha, v) == doctest::Approx(cond_entropy(ra, a, none, alpha, v)));
        }
    }
}

TEST_CASE("unconditional Rényi entropies of a distribution") {
    const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    const DensityOperator rho = embed_classical(ProbDist(p), "A");
    const Names a{"A"}, none{};
    for (double alpha : {0.5, 2.0, 3.0}) {
        CHECK(cond_entropy(rho, a, none, alpha, EntropyVariant::Sandwiched) == doctest::Approx(renyi_entropy(p, alpha)));
    }
}

TEST_CASE("H-up of classical pairs follows the Arimoto formula") {
    // p(a, b) on a 2x3 alphabet, flattened a*3 + b.
    const std::vector<double> joint{0.10, 0.25, 0.05, 0.20, 0.05, 0.35};
    const DensityOperator rho(ComplexMatrix::diagonal(joint), {{"A", 2}, {"B", 3}});
    for (double alpha : {0.5, 0.75, 1.5, 3.0}) {
        double sum = 0.0;
        for (std::size_t b = 0; b < 3; ++b) {
            const double s = std::pow(joint[b], alpha) + std::pow(joint[3 + b], alpha);
            sum += std::pow(s, 1.0 / alpha);
        }
        const double arimoto = alpha / (1.0 - alpha) * std::log2(sum);
        const UpEntropyResult up = cond_entropy_up(rho, Names{"A"}, Names{"B"}, alpha);
        CHECK(up.value == doctest::Approx(arimoto).epsilon(1e-8));
        CHECK(up.sigma_b.trace().real() == doctest::Approx(1.0));
        CHECK(up.iterations <= 500);
    }
    CHECK(kind_of([&] { cond_entropy_up(rho, Names{"A"}, Names{"B"}, kInfinity); }) == ErrorKind::AlphaOutOfRange);
}

TEST_CASE("H-up dominates H at the same order") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        const DensityOperator rho = random_density({{"A", 2}, {"B", 2}}, 3, rng);
        for (double alpha : {0.7, 1.5}) {
            const double up = cond_entropy(rho, Names{"A"}, Names{"B"}, alpha, EntropyVariant::Up);
            CHECK(up >= cond_entropy(rho, Names{"A"}, Names{"B"}, alpha, EntropyVariant::Sandwiched) - 1e-9);
        }
    }
}

TEST_CASE("conditional and mutual reference pairs") {
    const DensityOperator phi = bell_phi(0.3);
    const ReferencePair c = conditional_pair(phi, Names{"A"}, Names{"B"});
    CHECK(max_abs_diff(c.reference, tensor_product(ComplexMatrix::identity(2), diag({0.3, 0.7}))) <= 1e-12);
    const ReferencePair m = mutual_pair(phi, Names{"A"}, Names{"B"});
    CHECK(max_abs_diff(m.reference, tensor_product(diag({0.3, 0.7}), diag({0.3, 0.7}))) <= 1e-12);
    CHECK(kind_of([&] { mutual_pair(phi, Names{"A"}, Names{}); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { conditional_pair(phi, Names{"A"}, Names{"A"}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("purified distance") {
    const ComplexMatrix zero = diag({1.0, 0.0}), one = diag({0.0, 1.0});
    CHECK(purified_distance(zero, zero) == doctest::Approx(0.0).scale(1.0));
    CHECK(purified_distance(zero, one) == doctest::Approx(1.0));
    // F = ⟨0|σ|0⟩ = 0.64, so P = sqrt(1 - 0.64).
    CHECK(purified_distance(zero, diag({0.64, 0.36})) == doctest::Approx(0.6));
}
