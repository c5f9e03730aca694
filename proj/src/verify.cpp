#include "qeat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qeat/continuity.hpp"
#include "qeat/divergences.hpp"
#include "qeat/eat.hpp"
#include "qeat/error.hpp"
#include "qeat/states.hpp"
#include "qeat/variance.hpp"

namespace qeat {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
    }

    /// a ≤ b + slack
    void at_most(double a, double b, double slack, const std::string& what) {
        expect(a <= b + slack, what + ": " + num(a) + " > " + num(b));
    }

    void close(double a, double b, double tol, const std::string& what) {
        expect(std::abs(a - b) <= tol, what + ": " + num(a) + " vs " + num(b));
    }

    static std::string num(double v) {
        std::ostringstream s;
        s.precision(12);
        s << v;
        return s.str();
    }

    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

ComplexMatrix full_rank(std::size_t d, Rng& rng) {
    return random_density({{"S", d}}, d, rng).matrix();
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
    ComplexMatrix h(d);
    for (std::size_t i = 0; i < d; ++i) {
        h(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < d; ++j) {
            h(i, j) = rng.complex_normal();
            h(j, i) = std::conj(h(i, j));
        }
    }
    return hermitian_eig(h).eigenvectors;
}

DensityOperator rotate(const DensityOperator& rho, const ComplexMatrix& u) {
    ComplexMatrix m = u * rho.matrix() * u.adjoint();
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return DensityOperator(std::move(h), rho.subsystems());
}

CQState random_branches(const std::string& reg, std::size_t count, Rng& rng,
                        const std::function<DensityOperator(Rng&)>& make) {
    const ProbDist p = random_distribution(count, rng);
    CQState cq{reg, {}};
    for (std::size_t x = 0; x < count; ++x) cq.branches.push_back({std::to_string(x), p[x], make(rng)});
    return cq;
}

double weighted_mean(const CQState& cq, const std::vector<double>& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += cq.branches[i].probability * w[i];
    return s;
}

// Variance identity suites --------------------------------------------------------

void additivity(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d1 = pick(rng, 2, 4), d2 = pick(rng, 2, 3);
        const ComplexMatrix rho = full_rank(d1, rng), sigma = full_rank(d1, rng);
        const ComplexMatrix tau = full_rank(d2, rng), omega = full_rank(d2, rng);
        const double joint = divergence_variance(tensor_product(rho, tau), tensor_product(sigma, omega));
        c.close(joint, divergence_variance(rho, sigma) + divergence_variance(tau, omega), 1e-9,
                "V of product vs sum");
    }
}

void classical_x(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t da = pick(rng, 2, 3), db = pick(rng, 2, 3);
        const CQState cq = random_branches("X", pick(rng, 2, 3), rng, [&](Rng& r) {
            return random_density({{"A", da}, {"B", db}}, pick(r, 1, da * db), r);
        });
        const DensityOperator rho = assemble_cq(cq);
        const double direct = cond_entropy_variance(rho, {"A"}, {"B", "X"});
        const VarianceDecomposition split = classical_x_decompose(cq, {"A"}, {"B"});
        c.close(direct, split.total, 1e-9, "V(A|BX) vs decomposition");
        c.at_most(split.branch_average(), direct, 1e-9, "branch average exceeds V(A|BX)");
    }
}

void markov(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const CQState cq = random_branches("X", pick(rng, 2, 3), rng, [](Rng& r) {
            return product_state(random_density({{"A", 2}, {"C", 2}}, pick(r, 1, 4), r),
                                 random_density({{"B", 2}, {"D", 2}}, pick(r, 1, 4), r));
        });
        const DensityOperator rho = assemble_cq(cq);
        std::vector<double> w1, w2;
        for (const auto& b : cq.branches) {
            w1.push_back(cond_entropy(b.state, {"A"}, {"C"}, 1.0, EntropyVariant::Sandwiched));
            w2.push_back(cond_entropy(b.state, {"B"}, {"D"}, 1.0, EntropyVariant::Sandwiched));
        }
        std::vector<double> w12;
        for (std::size_t i = 0; i < w1.size(); ++i) w12.push_back(w1[i] * w2[i]);
        const double cov = weighted_mean(cq, w12) - weighted_mean(cq, w1) * weighted_mean(cq, w2);

        const double lhs = cond_entropy_variance(rho, {"A", "B"}, {"C", "D", "X"});
        const double rhs = cond_entropy_variance(rho, {"A"}, {"C", "X"}) +
                           cond_entropy_variance(rho, {"B"}, {"D", "X"}) + 2.0 * cov;
        c.close(lhs, rhs, 1e-9, "Markov decomposition");
    }
}

// τ on D D̄ whose D̄ marginal is maximally mixed.
DensityOperator uniform_dbar(Rng& rng) {
    const std::size_t d = 2;
    const DensityOperator omega = random_density({{"D", d}, {"Dbar", d}}, d * d, rng);
    const ComplexMatrix root = power_on_support(hermitian_eig(omega.marginal(Names{"Dbar"}).matrix()), -0.5);
    ComplexMatrix scale = embed_operator(root, omega.dims(), std::vector<std::size_t>{1});
    scale *= 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix tau = scale * omega.matrix() * scale;
    ComplexMatrix h = tau + tau.adjoint();
    h *= 0.5;
    h *= 1.0 / h.trace().real();
    return DensityOperator(std::move(h), omega.subsystems());
}

void entropy_price(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const CQState cq = random_branches("X", 2, rng, [](Rng& r) {
            return product_state(random_density({{"A", 2}, {"C", 2}}, pick(r, 1, 4), r), uniform_dbar(r));
        });
        const DensityOperator rho = assemble_cq(cq);
        const double lhs = cond_entropy_variance(rho, {"A", "D", "X"}, {"C", "Dbar"});
        const double v1 = cond_entropy_variance(rho, {"A", "X"}, {"C"});
        const double v2 = cond_entropy_variance(rho, {"D"}, {"X", "Dbar"});
        c.at_most(lhs, v1 + v2 + 2.0 * std::sqrt(v1 * v2), 1e-9, "entropy-price bound");
    }
}

void chain_rule(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t da = pick(rng, 2, 3), db = pick(rng, 1, 3), dc = 2;
        std::vector<Subsystem> subsystems{{"A", da}, {"B", db}, {"C", dc}};
        const DensityOperator rho = random_density(subsystems, da * db * dc, rng);
        c.close(chain_rule_cross_terms(rho, {"A"}, {"B"}, {"C"}).residual(), 0.0, 1e-9,
                "chain-rule residual");
    }
}

void orthogonal(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t k = 2, block = 2, db = 2;
        const ComplexMatrix u = tensor_product(random_unitary(k * block, rng), ComplexMatrix::identity(db));
        const CQState cq = random_branches("X", k, rng, [&, index = std::size_t{0}](Rng& r) mutable {
            const DensityOperator local = random_density({{"a", block}, {"B", db}}, block * db, r);
            ComplexMatrix slot(k);
            slot(index, index) = 1.0;
            ++index;
            const DensityOperator placed(tensor_product(slot, local.matrix()),
                                         {{"A", k * block}, {"B", db}});
            return rotate(placed, u);
        });
        const DensityOperator rho = assemble_cq(cq);
        c.close(cond_entropy_variance(rho, {"A", "X"}, {"B"}), cond_entropy_variance(rho, {"A"}, {"B"}),
                1e-9, "V(AX|B) vs V(A|B)");
        const ChainRuleTerms terms = chain_rule_cross_terms(rho, {"A"}, {"B"}, {"X"});
        c.close(terms.cross, 0.0, 1e-9, "cross term");
        c.close(terms.v_c_given_ba, 0.0, 1e-9, "V(X|BA)");
    }
}

void dimension(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t da = pick(rng, 2, 4), db = pick(rng, 2, 3);
        const DensityOperator rho = random_density({{"A", da}, {"B", db}}, pick(rng, 1, da * db), rng);
        c.at_most(cond_entropy_variance(rho, {"A"}, {"B"}),
                  dimension_bound(da, VarianceKind::Conditional, false), 1e-9, "V(A|B) quantum");
        c.at_most(mutual_info_variance(rho, {"A"}, {"B"}), dimension_bound(da, VarianceKind::Mutual, false),
                  1e-9, "V(A;B) quantum");

        const CQState cq = random_branches("A", da, rng, [&](Rng& r) {
            return random_density({{"B", db}}, pick(r, 1, db), r);
        });
        const DensityOperator classical = assemble_cq(cq);
        c.at_most(cond_entropy_variance(classical, {"A"}, {"B"}),
                  dimension_bound(da, VarianceKind::Conditional, true), 1e-9, "V(A|B) classical");
        c.at_most(mutual_info_variance(classical, {"A"}, {"B"}),
                  dimension_bound(da, VarianceKind::Mutual, true), 1e-9, "V(A;B) classical");
    }
}

void general_bound(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ComplexMatrix rho = full_rank(d, rng), sigma = full_rank(d, rng);
        const double v = divergence_variance(rho, sigma);
        for (double nu : {0.25, 0.5, 0.9}) {
            c.at_most(v, variance_upper_bound(rho, sigma, nu), 1e-9, "nu = " + Checker::num(nu));
        }
    }
}

void data_processing(Checker& c, Rng& rng, int trials) {
    const auto image = [](double flip, const ComplexMatrix& m) {
        return apply_kraus(m, binary_symmetric_channel(flip));
    };
    const ComplexMatrix zero = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const double before = divergence_variance(zero, id);
    const double after = divergence_variance(image(0.083, zero), image(0.083, id));
    c.expect(after > before, "V increased under the 0.083 bit flip");
    c.close(after, 0.9142, 1e-3, "V after the 0.083 bit flip");
    for (int t = 1; t < trials; ++t) {
        const double flip = uniform_in(rng, 0.01, 0.49);
        c.expect(divergence_variance(image(flip, zero), image(flip, id)) > before,
                 "V increased under flip " + Checker::num(flip));
    }
}

// Divergence and continuity suites ------------------------------------------------

void continuity(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ComplexMatrix rho = full_rank(d, rng), sigma = full_rank(d, rng);
        for (double alpha : {1.1, 1.5, 1.9}) {
            const ContinuityReport r = continuity_check(rho, sigma, alpha, 2.0 - alpha);
            c.expect(r.satisfied(1e-9), "chain at alpha " + Checker::num(alpha) + ": " +
                                            Checker::num(r.lhs_sandwiched) + " <= " +
                                            Checker::num(r.lhs_petz) + " <= " + Checker::num(r.rhs));
        }
    }
}

void nussbaum_szkola_suite(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ComplexMatrix rho = full_rank(d, rng), sigma = full_rank(d, rng);
        const auto [p, q] = nussbaum_szkola(rho, sigma);
        for (double alpha : {0.3, 0.7, 1.5, 2.0}) {
            c.close(petz_renyi(rho, sigma, alpha), classical_renyi(p, q, alpha), 1e-8,
                    "D' at alpha " + Checker::num(alpha));
        }
        c.close(divergence_variance(rho, sigma), classical_divergence_variance(p, q), 1e-8, "V");
    }
}

void commuting(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ProbDist p = random_distribution(d, rng), q = random_distribution(d, rng);
        const ComplexMatrix u = random_unitary(d, rng);
        const ComplexMatrix rho = u * ComplexMatrix::diagonal(p.weights()) * u.adjoint();
        const ComplexMatrix sigma = u * ComplexMatrix::diagonal(q.weights()) * u.adjoint();
        for (double alpha : {0.5, 0.8, 1.0, 1.5, 2.0}) {
            const double expected = classical_renyi(p, q, alpha);
            c.close(sandwiched_renyi(rho, sigma, alpha), expected, 1e-9,
                    "sandwiched at " + Checker::num(alpha));
            c.close(petz_renyi(rho, sigma, alpha), expected, 1e-9, "Petz at " + Checker::num(alpha));
        }
        c.close(petz_renyi(rho, sigma, 0.0), classical_renyi(p, q, 0.0), 1e-9, "Petz at 0");
        c.close(sandwiched_renyi(rho, sigma, kInfinity), classical_renyi(p, q, kInfinity), 1e-9,
                "max divergence");
    }
}

void monotonicity(Checker& c, Rng& rng, int trials) {
    const std::vector<double> orders{0.5, 0.7, 0.9, 1.0, 1.3, 1.7, 2.0, 3.0, kInfinity};
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ComplexMatrix rho = random_density({{"S", d}}, pick(rng, 1, d), rng).matrix();
        const ComplexMatrix sigma = full_rank(d, rng);
        double previous = -kInfinity;
        for (double alpha : orders) {
            const double v = sandwiched_renyi(rho, sigma, alpha);
            c.at_most(previous, v, 1e-9, "order " + Checker::num(alpha));
            previous = v;
        }
    }
}

void ordering(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t d = pick(rng, 2, 4);
        const ComplexMatrix rho = full_rank(d, rng), sigma = full_rank(d, rng);
        for (double alpha : {1.2, 1.5, 2.0}) {
            c.at_most(sandwiched_renyi(rho, sigma, alpha), petz_renyi(rho, sigma, alpha), 1e-9,
                      "D vs D' at " + Checker::num(alpha));
        }
        const std::size_t db = pick(rng, 2, 3);
        const DensityOperator ab = random_density({{"A", 2}, {"B", db}}, pick(rng, 1, 2 * db), rng);
        for (double alpha : {0.6, 1.5, 2.0}) {
            c.at_most(cond_entropy(ab, {"A"}, {"B"}, alpha, EntropyVariant::Sandwiched),
                      cond_entropy(ab, {"A"}, {"B"}, alpha, EntropyVariant::Up), 1e-9,
                      "H vs H-up at " + Checker::num(alpha));
        }
    }
}

void arimoto(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t da = pick(rng, 2, 3), db = pick(rng, 2, 3);
        const ProbDist p = random_distribution(da * db, rng);
        const DensityOperator rho(ComplexMatrix::diagonal(p.weights()), {{"A", da}, {"B", db}});
        for (double alpha : {0.6, 1.5, 2.5}) {
            double outer = 0.0;
            for (std::size_t b = 0; b < db; ++b) {
                double inner = 0.0;
                for (std::size_t a = 0; a < da; ++a) inner += std::pow(p[a * db + b], alpha);
                outer += std::pow(inner, 1.0 / alpha);
            }
            const double expected = alpha / (1.0 - alpha) * std::log2(outer);
            c.close(cond_entropy(rho, {"A"}, {"B"}, alpha, EntropyVariant::Up), expected, 1e-6,
                    "alpha " + Checker::num(alpha));
        }
    }
}

void mixture(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const CQState cq = random_branches("X", pick(rng, 2, 3), rng, [](Rng& r) {
            return random_density({{"A", 2}, {"B", 2}}, pick(r, 1, 4), r);
        });
        ComplexMatrix mix(4);
        for (const auto& b : cq.branches) mix += b.probability * b.state.matrix();
        const DensityOperator rho(std::move(mix), cq.branches.front().state.subsystems());
        for (double alpha : {1.3, 1.7, 0.7}) {
            const double whole = cond_entropy(rho, {"A"}, {"B"}, alpha, EntropyVariant::Up);
            for (const auto& b : cq.branches) {
                const double lhs = whole - alpha / (alpha - 1.0) * std::log2(1.0 / b.probability);
                const double branch = cond_entropy(b.state, {"A"}, {"B"}, alpha, EntropyVariant::Up);
                const std::string what = "alpha " + Checker::num(alpha) + " branch " + b.symbol;
                if (alpha > 1.0) {
                    c.at_most(lhs, branch, 1e-8, what);
                } else {
                    c.at_most(branch, lhs, 1e-8, what);
                }
            }
        }
    }
}

void cq_dimension(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t da = pick(rng, 2, 3), db = pick(rng, 1, 3);
        const CQState cq = random_branches("X", pick(rng, 2, 3), rng, [&](Rng& r) {
            return random_density({{"A", da}, {"B", db}}, pick(r, 1, da * db), r);
        });
        const DensityOperator rho = assemble_cq(cq);
        for (double alpha : {0.3, 0.7, 1.5, 2.0}) {
            c.at_most(-std::log2(static_cast<double>(da)),
                      cond_entropy(rho, {"A", "X"}, {"B"}, alpha, EntropyVariant::Petz), 1e-8,
                      "alpha " + Checker::num(alpha));
        }
    }
}

void optimizer(Checker& c, Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        EatParams p;
        p.n = std::round(std::pow(10.0, uniform_in(rng, 4.0, 12.0)));
        p.eps = std::pow(10.0, uniform_in(rng, -10.0, -1.0));
        p.p_omega = std::pow(10.0, uniform_in(rng, -6.0, 0.0));
        p.d_a = pick(rng, 2, 4);
        p.classical_a = rng.next() % 2 == 0;
        p.h = uniform_in(rng, 0.1, 1.0);
        TradeoffStats s;
        s.max_f = uniform_in(rng, 0.5, 2.0);
        s.min_f = s.max_f - uniform_in(rng, 0.0, 4.0);
        s.min_sigma_f = uniform_in(rng, s.min_f, s.max_f);
        s.var_f = uniform_in(rng, 0.0, 50.0);

        const AlphaOptimum free = optimize_alpha(p, s, {.include_k = false});
        c.close(free.alpha, closed_form_alpha(p, s), 1e-6, "alpha without the K term");

        const AlphaOptimum best = optimize_alpha(p, s);
        double grid_best = -kInfinity;
        for (int i = 0; i < 200; ++i) {
            const double alpha = kAlphaSearchLow + (kAlphaSearchHigh - kAlphaSearchLow) * i / 199.0;
            grid_best = std::max(grid_best, eat_bound_alpha(p, s, alpha));
        }
        c.at_most(grid_best, best.bound, 1e-9 * std::abs(best.bound), "grid beats optimizer");
        c.at_most(eat_bound_alpha(p, s, closed_form_alpha(p, s)), best.bound, 0.0,
                  "closed-form alpha beats optimizer");
    }
}

struct Suite {
    SuiteInfo info;
    std::function<void(Checker&, Rng&, int)> run;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {{"additivity", "V of tensor products adds"}, additivity},
        {{"classical-x", "V(A|BX) splits into branch variances plus entropy spread"}, classical_x},
        {{"markov", "V(AB|CDX) for Markov states via the covariance of branch entropies"}, markov},
        {{"entropy-price", "V(ADX|C Dbar) bound for maximally mixed Dbar"}, entropy_price},
        {{"chain-rule", "V(AC|B) = V(A|B) + V(C|BA) + cross term"}, chain_rule},
        {{"orthogonal", "orthogonal branches leave V(A|B) unchanged"}, orthogonal},
        {{"dimension", "dimension bounds on V(A|B) and V(A;B)"}, dimension},
        {{"general-bound", "V bounded by Petz divergences of orders 1 +- nu"}, general_bound},
        {{"data-processing", "a bit flip can increase V"}, data_processing},
        {{"continuity", "D_a <= D'_a <= D + (a-1) ln2/2 V + (a-1)^2 K"}, continuity},
        {{"nussbaum-szkola", "Petz divergences and V equal those of the classical pair"},
         nussbaum_szkola_suite},
        {{"commuting", "commuting inputs reproduce the classical Renyi divergence"}, commuting},
        {{"monotonicity", "sandwiched divergence is nondecreasing in alpha"}, monotonicity},
        {{"ordering", "sandwiched <= Petz, and H <= H-up"}, ordering},
        {{"arimoto", "H-up of classical states matches the Arimoto formula"}, arimoto},
        {{"mixture", "H-up of a mixture against its branches"}, mixture},
        {{"cq-dimension", "H'(AX|B) >= -log d_A for classical X"}, cq_dimension},
        {{"optimizer", "alpha optimization against closed form and grid"}, optimizer},
    };
    return all;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = [] {
        std::vector<SuiteInfo> out;
        for (const auto& s : suites()) out.push_back(s.info);
        return out;
    }();
    return catalog;
}

bool is_suite(const std::string& name) {
    const auto& all = suites();
    return std::any_of(all.begin(), all.end(), [&](const Suite& s) { return s.info.name == name; });
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
    const auto& all = suites();
    const auto it =
        std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.info.name == name; });
    if (it == all.end()) throw Error(ErrorKind::DomainError, "unknown suite " + name);
    if (trials < 1) throw Error(ErrorKind::DomainError, "trials must be positive");

    const auto start = std::chrono::steady_clock::now();
    Checker checker;
    Rng rng(seed ^ fnv1a(name));
    try {
        it->run(checker, rng, trials);
    } catch (const std::exception& e) {
        checker.expect(false, std::string("exception: ") + e.what());
    }
    SuiteResult r;
    r.name = name;
    r.passed = checker.passed;
    r.failed = checker.failed;
    r.failures = std::move(checker.failures);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter, std::uint64_t seed,
                                    int trials) {
    for (const auto& name : filter) {
        if (!is_suite(name)) throw Error(ErrorKind::DomainError, "unknown suite " + name);
    }
    std::vector<SuiteResult> out;
    for (const auto& info : suite_catalog()) {
        if (filter.empty() || std::find(filter.begin(), filter.end(), info.name) != filter.end()) {
            out.push_back(run_suite(info.name, seed, trials));
        }
    }
    return out;
}

}  // namespace qeat
