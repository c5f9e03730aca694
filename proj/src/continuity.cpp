#include "qeat/continuity.hpp"

#include <cmath>
#include <numbers>

#include "qeat/divergences.hpp"
#include "qeat/error.hpp"
#include "qeat/variance.hpp"

namespace qeat {

namespace {

// ln(2^t + e²) without overflow for large t.
double ln_two_pow_plus_e2(double t) {
    const double a = t * std::numbers::ln2;
    const double hi = std::max(a, 2.0);
    const double lo = std::min(a, 2.0);
    return hi + std::log1p(std::exp(lo - hi));
}

void check_orders(double alpha, double mu) {
    if (!(alpha > 1.0) || std::isinf(alpha)) {
        throw Error(ErrorKind::AlphaOutOfRange, "alpha must be a finite order above 1");
    }
    if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorKind::DomainError, "mu must lie in (0, 1)");
}

}  // namespace

double k_remainder(const ComplexMatrix& rho, const ComplexMatrix& sigma, double alpha, double mu) {
    check_orders(alpha, mu);
    const double d = relative_entropy(rho, sigma);
    if (std::isinf(d)) {
        throw Error(ErrorKind::SupportViolation, "supp(rho) is not contained in supp(sigma)");
    }
    const double d_alpha = petz_renyi_any_order(rho, sigma, alpha);
    const double d_upper = petz_renyi_any_order(rho, sigma, alpha + mu);
    if (std::isinf(d_alpha) || std::isinf(d_upper)) {
        throw Error(ErrorKind::DivergenceInfinite, "Petz divergence is infinite");
    }
    const double l = ln_two_pow_plus_e2((alpha + mu - 1.0) * (d_upper - d));
    return std::exp2((alpha - 1.0) * (d_alpha - d)) * l * l * l /
           (6.0 * mu * mu * mu * std::numbers::ln2);
}

double k_conditional(const DensityOperator& rho, const Names& a, const Names& b, double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw Error(ErrorKind::AlphaOutOfRange, "alpha must lie in (1, 2)");
    }
    const ReferencePair pair = conditional_pair(rho, a, b);
    return k_remainder(pair.rho.matrix(), pair.reference, alpha, 2.0 - alpha);
}

bool ContinuityReport::satisfied(double slack) const {
    return lhs_sandwiched <= lhs_petz + slack && lhs_petz <= rhs + slack;
}

ContinuityReport continuity_check(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                                  double alpha, double mu) {
    ContinuityReport r;
    r.alpha = alpha;
    r.mu = mu;
    r.k = k_remainder(rho, sigma, alpha, mu);
    r.lhs_sandwiched = sandwiched_renyi(rho, sigma, alpha);
    r.lhs_petz = petz_renyi_any_order(rho, sigma, alpha);
    r.relative_entropy = relative_entropy(rho, sigma);
    r.variance = divergence_variance(rho, sigma);
    const double t = alpha - 1.0;
    r.rhs = r.relative_entropy + t * std::numbers::ln2 / 2.0 * r.variance + t * t * r.k;
    return r;
}

}  // namespace qeat
