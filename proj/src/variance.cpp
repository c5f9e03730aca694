#include "qeat/variance.hpp"

#include <cmath>

#include "qeat/divergences.hpp"
#include "qeat/error.hpp"

namespace qeat {

namespace {

constexpr double kClampWindow = 1e-9;

double clamp_roundoff(double v) { return (v < 0.0 && v >= -kClampWindow) ? 0.0 : v; }

ComplexMatrix centred(ComplexMatrix op, const ComplexMatrix& rho, double tr) {
    const double mean = trace_of_product(rho, op).real() / tr;
    for (std::size_t i = 0; i < op.dim(); ++i) op(i, i) -= mean;
    return op;
}

ComplexMatrix embedded_log(const DensityOperator& whole, const Names& part) {
    const DensityOperator marginal = whole.marginal(part);
    return embed_operator(log2_on_support(hermitian_eig(marginal.matrix())), whole.dims(),
                          whole.indices_of(part));
}

Names concat(Names a, const Names& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

double divergence_variance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (std::isinf(relative_entropy(rho, sigma))) {
        throw Error(ErrorKind::SupportViolation, "supp(rho) is not contained in supp(sigma)");
    }
    const Spectrum rs = hermitian_eig(rho);
    const double tr = rho.trace().real();
    const ComplexMatrix l = log2_on_support(rs) - log2_on_support(hermitian_eig(sigma));
    // ‖(L − D)ρ^{1/2}‖_F² avoids subtracting two large second moments.
    const ComplexMatrix spread = centred(l, rho, tr) * power_on_support(rs, 0.5);
    const double norm = spread.frobenius_norm();
    return clamp_roundoff(norm * norm / tr);
}

double cond_entropy_variance(const DensityOperator& rho, const Names& a, const Names& b) {
    const ReferencePair pair = conditional_pair(rho, a, b);
    return divergence_variance(pair.rho.matrix(), pair.reference);
}

double mutual_info_variance(const DensityOperator& rho, const Names& a, const Names& b) {
    const ReferencePair pair = mutual_pair(rho, a, b);
    return divergence_variance(pair.rho.matrix(), pair.reference);
}

double bernoulli_entropy_variance(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::DomainError, "q must lie in [0, 1]");
    if (q == 0.0 || q == 1.0) return 0.0;
    const double l = std::log2(q / (1.0 - q));
    return q * (1.0 - q) * l * l;
}

double variance_upper_bound(const ComplexMatrix& rho, const ComplexMatrix& sigma, double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw Error(ErrorKind::DomainError, "nu must lie in (0, 1)");
    const double d = relative_entropy(rho, sigma);
    if (std::isinf(d)) {
        throw Error(ErrorKind::SupportViolation, "supp(rho) is not contained in supp(sigma)");
    }
    const double upper = petz_renyi(rho, sigma, 1.0 + nu);
    const double lower = petz_renyi(rho, sigma, 1.0 - nu);
    const double inner = std::exp2(nu * (upper - d)) + std::exp2(nu * (d - lower)) + 1.0;
    const double l = std::log2(inner);
    return l * l / (nu * nu);
}

double dimension_bound(std::size_t d_a, VarianceKind kind, bool classical_a) {
    if (d_a == 0) throw Error(ErrorKind::DomainError, "d_A must be at least 1");
    const double d = static_cast<double>(d_a);
    if (kind == VarianceKind::Conditional) {
        const double l = std::log2((classical_a ? 2.0 * d : 2.0 * d * d) + 1.0);
        return l * l;
    }
    const double l = std::log2(2.0 * (classical_a ? std::sqrt(d) : d) + 1.0);
    return 4.0 * l * l;
}

double VarianceDecomposition::branch_average() const {
    double s = 0.0;
    for (const auto& b : per_branch) s += b.probability * b.variance;
    return s;
}

VarianceDecomposition classical_x_decompose(const CQState& cq, const Names& a, const Names& b) {
    VarianceDecomposition out;
    double mean = 0.0, second = 0.0;
    for (const auto& branch : cq.branches) {
        const double w = cond_entropy(branch.state, a, b, 1.0, EntropyVariant::Sandwiched);
        out.per_branch.push_back(
            {branch.symbol, branch.probability, cond_entropy_variance(branch.state, a, b)});
        mean += branch.probability * w;
        second += branch.probability * w * w;
    }
    out.spread_term = clamp_roundoff(second - mean * mean);
    out.total = out.branch_average() + out.spread_term;
    return out;
}

VarianceDecomposition classical_x_decompose(const DensityOperator& rho, const Names& a,
                                            const Names& b, const std::string& register_name) {
    return classical_x_decompose(extract_cq(rho, register_name), a, b);
}

ChainRuleTerms chain_rule_cross_terms(const DensityOperator& rho, const Names& a, const Names& b,
                                      const Names& c) {
    const Names ab = concat(a, b);
    const Names abc = concat(ab, c);
    const DensityOperator whole = rho.marginal(abc);
    const double tr = whole.trace();

    const ComplexMatrix log_ab = embedded_log(whole, ab);
    const ComplexMatrix log_b = embedded_log(whole, b);
    const ComplexMatrix log_abc = log2_on_support(hermitian_eig(whole.matrix()));

    const ComplexMatrix first = centred(log_ab - log_b, whole.matrix(), tr);
    const ComplexMatrix second = centred(log_abc - log_ab, whole.matrix(), tr);

    ChainRuleTerms t;
    t.v_ac_given_b = cond_entropy_variance(whole, concat(a, c), b);
    t.v_a_given_b = cond_entropy_variance(whole, a, b);
    t.v_c_given_ba = cond_entropy_variance(whole, c, concat(b, a));
    t.cross = 2.0 * trace_of_product(whole.matrix(), first * second).real() / tr;
    return t;
}

}  // namespace qeat
