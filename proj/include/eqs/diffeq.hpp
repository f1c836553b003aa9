#ifndef EQS_DIFFEQ_HPP
#define EQS_DIFFEQ_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eqs/configuration.hpp"
#include "eqs/electrostatics.hpp"
#include "eqs/field.hpp"
#include "eqs/polynomial.hpp"

namespace eqs {

/// Forward difference Delta_h p = p(x+h) - p(x). Drops the degree by exactly
/// one: the leading coefficients cancel without rounding.
inline Polynomial delta(const Polynomial& p, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("delta: h must be positive");
    return p.shifted(h) - p;
}

/// Backward difference Nabla_h p = p(x) - p(x-h).
inline Polynomial nabla(const Polynomial& p, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("nabla: h must be positive");
    return p - p.shifted(-h);
}

struct InferenceResult {
    bool ok = false;
    Polynomial C;
    double remainder_norm = 0.0;  // relative to the dividend norm
};

/// Recovers C such that A Delta Nabla p + B Delta p + C p = 0, by dividing
/// the operator image by p. Fails (with the remainder norm) when p is not a
/// polynomial solution for any C. Degrees above 20 are rejected; the
/// monomial-basis division is no longer trustworthy there.
inline InferenceResult infer_C(const Polynomial& a, const Polynomial& b, const Polynomial& p,
                               double h) {
    if (p.is_zero()) throw std::invalid_argument("infer_C: p must be nonzero");
    if (p.degree() > 20) throw std::invalid_argument("infer_C: degree above 20 unsupported");
    const Polynomial plus = p.shifted(h);
    const Polynomial minus = p.shifted(-h);
    const Polynomial dn = plus - 2.0 * p + minus;  // Delta Nabla p
    const Polynomial d = plus - p;                 // Delta p
    const Polynomial q = a * dn + b * d;

    auto [quot, rem] = divide(q, p);
    const double scale = std::max(q.inf_norm(), 1e-300);
    const double rel = rem.inf_norm() / scale;
    if (rel >= 1e-8) return {false, {}, rel};
    return {true, quot * -1.0, rel};
}

struct CriticalResidual {
    double max_residual = 0.0;            // difference-equation form
    std::vector<double> per_point;
    double max_force_residual = 0.0;      // equivalent force form
};

namespace detail {

inline double root_product(const std::vector<double>& roots, double x) {
    double p = 1.0;
    for (double r : roots) p *= (x - r);
    return p;
}

}  // namespace detail

/// Residual of the difference equation at each configuration point, for
/// p = prod (x - x_j). Point values of p come from the root product, not
/// from expanded coefficients, so no cancellation is introduced. Also
/// reports the equivalent total-force residual.
inline CriticalResidual verify_critical(const ChargeConfiguration& cfg,
                                        const RationalField& field) {
    CriticalResidual out;
    const auto& x = cfg.points;
    const double h = cfg.h;
    out.per_point.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double pp = detail::root_product(x, x[j] + h);
        const double pm = detail::root_product(x, x[j] - h);
        const double p0 = detail::root_product(x, x[j]);  // exactly zero
        const double av = field.A()(x[j]);
        const double bv = field.B()(x[j]);
        const double num = av * (pp - 2.0 * p0 + pm) + bv * (pp - p0);
        const double den = std::abs(av * pp);
        const double r = den > 0.0 ? std::abs(num) / den : kInf;
        out.per_point.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
        out.max_force_residual =
            std::max(out.max_force_residual, std::abs(total_force(cfg, field, j)));
    }
    return out;
}

/// Constant C implied by matching the x^n coefficient of the difference
/// equation applied to a monic degree-n polynomial, for deg A <= 2,
/// deg B <= 1. Equals n for Charlier and Krawtchouk coefficients; other
/// families rescale it through the coefficient of B.
inline double leading_coefficient_identity(const Polynomial& a, const Polynomial& b, int n,
                                           double h) {
    if (a.degree() > 2 || b.degree() > 1)
        throw std::invalid_argument("leading_coefficient_identity: requires deg A <= 2, deg B <= 1");
    if (n < 0) throw std::invalid_argument("leading_coefficient_identity: n must be >= 0");
    const double nn = static_cast<double>(n);
    return -(a.coeff(2) * nn * (nn - 1.0) * h * h + b.coeff(1) * nn * h);
}

}  // namespace eqs

#endif  // EQS_DIFFEQ_HPP
