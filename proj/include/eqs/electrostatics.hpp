#ifndef EQS_ELECTROSTATICS_HPP
#define EQS_ELECTROSTATICS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "eqs/configuration.hpp"
#include "eqs/field.hpp"

namespace eqs {

/// Force exerted by a unit charge. Undefined inside the exclusion band
/// |y - x| <= h, where no other charge may sit.
struct ForceEvaluation {
    double value = 0.0;
    bool defined = false;
};

/// F_x(y) = (1/2h) log((y-x+h)/(y-x-h)) for |y-x| > h. Computed from the
/// separation |y-x| so that antisymmetry holds exactly. Far from the source
/// the log of a near-1 ratio loses precision, so a short series takes over.
inline ForceEvaluation pair_force(double x, double y, double h) {
    const double d = y - x;
    const double s = std::abs(d);
    if (!(s > h)) return {0.0, false};
    double mag;
    if (s > 1e4 * h) {
        mag = 1.0 / s + h * h / (3.0 * s * s * s);
    } else {
        mag = std::log1p(2.0 * h / (s - h)) / (2.0 * h);
    }
    return {d > 0.0 ? mag : -mag, true};
}

/// Pair potential V_x(y), defined for |y-x| >= h; returns +inf at exact
/// contact |y-x| = h. Even in y - x.
inline double pair_potential(double x, double y, double h) {
    const double s = std::abs(y - x);
    if (s < h) throw std::domain_error("pair_potential: |y - x| < h");
    if (s == h) return std::numeric_limits<double>::infinity();
    const double lr = std::log1p(2.0 * h / (s - h));  // log((s+h)/(s-h))
    return -(s / (2.0 * h)) * lr - 0.5 * (std::log(s + h) + std::log(s - h));
}

/// External force F_phi(x) = (1/2h) log((A+B)(x)/A(x)).
inline double external_force(const RationalField& field, double x) {
    const double r = field.ratio(x);
    if (!(r > 0.0))
        throw std::domain_error("external_force: 1 + B/A <= 0 at x = " + std::to_string(x));
    return std::log(r) / (2.0 * field.h());
}

namespace detail {

/// Integrand for the potential; clamps the rounding fringe right at domain
/// endpoints where A or A+B vanishes (the log singularity is integrable).
inline double guarded_force(const RationalField& field, double x) {
    const double av = field.A()(x), sv = field.sum()(x);
    double r = sv / av;
    if (!(r > 0.0) || !std::isfinite(r)) r = (std::abs(sv) < std::abs(av)) ? 1e-300 : 1e300;
    return std::log(r) / (2.0 * field.h());
}

}  // namespace detail

/// phi(x1) - phi(x0) as the definite integral of -F_phi over [x0, x1], both
/// endpoints inside (or on the boundary of) one domain interval.
inline double external_potential(const RationalField& field, double x0, double x1) {
    if (x0 == x1) return 0.0;
    const double lo = std::min(x0, x1), hi = std::max(x0, x1);
    bool inside = false;
    for (std::size_t i = 0; i < field.domain().size(); ++i) {
        const Interval& iv = field.domain().interval(i);
        const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
        if (lo >= iv.lo - slack && hi <= iv.hi + slack) inside = true;
    }
    if (!inside)
        throw std::invalid_argument("external_potential: [x0, x1] not inside one domain interval");

    thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
    const double val =
        integrator.integrate([&](double t) { return detail::guarded_force(field, t); }, lo, hi,
                             1e-14);
    return (x1 > x0) ? -val : val;
}

/// phi(x) with the deterministic anchor phi(anchor) = 0 on the interval
/// containing x. Energies on a fixed interval system are comparable because
/// the per-interval charge counts never change.
inline double field_potential(const RationalField& field, double x) {
    const auto idx = field.domain().locate(x);
    if (!idx) throw std::invalid_argument("field_potential: x outside the domain");
    return external_potential(field, field.domain().interval(*idx).anchor(), x);
}

/// Total force on charge j: pairwise contributions plus the external field.
inline double total_force(const ChargeConfiguration& cfg, const RationalField& field,
                          std::size_t j) {
    const auto& x = cfg.points;
    if (j >= x.size()) throw std::out_of_range("total_force: bad index");
    double f = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == j) continue;
        const ForceEvaluation fe = pair_force(x[k], x[j], cfg.h);
        if (!fe.defined)
            throw std::logic_error("total_force: charges closer than h at indices " +
                                   std::to_string(k) + "," + std::to_string(j));
        f += fe.value;
    }
    return f + external_force(field, x[j]);
}

/// E(x_1..x_n) = sum_{j != k} V_{x_k}(x_j) + 2 sum_j phi(x_j); every
/// unordered pair enters twice.
inline double energy(const ChargeConfiguration& cfg, const RationalField& field) {
    const auto& x = cfg.points;
    double e = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k)
            e += 2.0 * pair_potential(x[k], x[j], cfg.h);
    for (double xj : x) e += 2.0 * field_potential(field, xj);
    return e;
}

/// Gradient of the energy; component j equals -2 * total_force(j).
inline std::vector<double> energy_gradient(const ChargeConfiguration& cfg,
                                           const RationalField& field) {
    std::vector<double> g(cfg.points.size());
    for (std::size_t j = 0; j < cfg.points.size(); ++j) g[j] = -2.0 * total_force(cfg, field, j);
    return g;
}

}  // namespace eqs

#endif  // EQS_ELECTROSTATICS_HPP
