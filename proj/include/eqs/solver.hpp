#ifndef EQS_SOLVER_HPP
#define EQS_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqs/configuration.hpp"
#include "eqs/electrostatics.hpp"
#include "eqs/field.hpp"
#include "eqs/gconvex.hpp"

namespace eqs {

struct SolverOptions {
    double force_tolerance = 1e-11;  // stop when max |total force| falls below
    long max_sweeps = 100000;
    double bracket_shrink = 1e-13;   // keeps brackets off singular endpoints
    double unbounded_box = 0.0;      // initial span on infinite sides; 0 = derived
    std::function<void(const ChargeConfiguration&)> sweep_observer;  // called after each sweep
};

struct SolverResult {
    ChargeConfiguration configuration;
    long sweeps = 0;
    double final_max_force = kInf;
    std::vector<double> energy_trace;  // one entry per sweep, non-increasing
    bool converged = false;
    std::vector<std::string> notes;
};

namespace detail {

/// Zero of a strictly decreasing function on (lo, hi). Endpoints may be
/// singular (f -> +-inf) or infinite; infinite sides are bracketed by
/// geometric expansion, singular sides by shrinking the safety margin
/// toward the endpoint until the sign is right.
inline double find_zero_decreasing(const std::function<double(double)>& f, double lo, double hi,
                                   double shrink, double box) {
    if (!(lo < hi)) throw std::invalid_argument("find_zero_decreasing: empty slot");
    double L, H;
    if (std::isfinite(lo)) {
        double d = shrink * std::max(1.0, std::abs(lo));
        d = std::min(d, 0.25 * (std::isfinite(hi) ? hi - lo : 1.0));
        L = lo + d;
        int guard = 0;
        while (!(f(L) > 0.0)) {
            d *= 0.125;
            L = lo + d;
            if (++guard > 100 || d == 0.0)
                throw std::runtime_error("find_zero_decreasing: no sign change at left end");
        }
    } else {
        double w = box;
        int guard = 0;
        L = hi - w;
        while (!(f(L) > 0.0)) {
            w *= 2.0;
            L = hi - w;
            if (++guard > 200)
                throw std::runtime_error("find_zero_decreasing: left expansion failed");
        }
    }
    if (std::isfinite(hi)) {
        double d = shrink * std::max(1.0, std::abs(hi));
        d = std::min(d, 0.25 * (hi - L));
        H = hi - d;
        int guard = 0;
        while (!(f(H) < 0.0)) {
            d *= 0.125;
            H = hi - d;
            if (++guard > 100 || d == 0.0)
                throw std::runtime_error("find_zero_decreasing: no sign change at right end");
        }
    } else {
        double w = box;
        int guard = 0;
        H = L + w;
        while (!(f(H) < 0.0)) {
            w *= 2.0;
            H = L + w;
            if (++guard > 200)
                throw std::runtime_error("find_zero_decreasing: right expansion failed");
        }
    }
    double mid = 0.5 * (L + H);
    for (int it = 0; it < 300; ++it) {
        mid = 0.5 * (L + H);
        if (H - L <= 1e-14 * std::max(1.0, std::abs(mid))) break;
        const double fm = f(mid);
        if (fm > 0.0)
            L = mid;
        else
            H = mid;
    }
    return mid;
}

inline double place_unchecked(const std::vector<double>& fixed, const RationalField& field,
                              double lo, double hi, double h, const SolverOptions& opts,
                              double box) {
    auto f = [&](double x) {
        double s = 0.0;
        for (double p : fixed) {
            const ForceEvaluation fe = pair_force(p, x, h);
            // Inside a valid slot all separations exceed h; a hit here can
            // only come from probing right at the bracket fringe.
            if (!fe.defined) return (x > p) ? kInf : -kInf;
            s += fe.value;
        }
        return s + guarded_force(field, x);
    };
    return find_zero_decreasing(f, lo, hi, opts.bracket_shrink, box);
}

inline double derived_box(int n, double h) { return 2.0 * (n * h + 1.0); }

/// Zero crossing of the external force alone on an interval (exists for any
/// G-convex field). Used to anchor default initialisations on unbounded
/// intervals.
inline double field_zero_crossing(const RationalField& field, const Interval& iv,
                                  const SolverOptions& opts) {
    const double box = opts.unbounded_box > 0.0 ? opts.unbounded_box : derived_box(1, field.h());
    auto f = [&](double x) { return guarded_force(field, x); };
    return find_zero_decreasing(f, iv.lo, iv.hi, opts.bracket_shrink, box);
}

inline std::vector<double> default_init(const RationalField& field, const Interval& iv, int m,
                                        const SolverOptions& opts) {
    const double h = field.h();
    if (m <= 0) return {};
    std::vector<double> pts;
    if (iv.bounded()) {
        if (m == 1) return {iv.anchor()};
        const double len = iv.length();
        const double g = std::max(1.25 * h, len / (m + 1));
        if (iv.lo + m * g < iv.hi - 1e-9 * std::max(1.0, std::abs(iv.hi))) {
            for (int k = 1; k <= m; ++k) pts.push_back(iv.lo + g * k);
        } else {
            // tight capacity: centre a grid with spacing between h and L/(m-1)
            const double smax = len / (m - 1);
            if (!(smax > h))
                throw std::invalid_argument("solve_equilibrium: interval cannot hold " +
                                            std::to_string(m) + " charges with gap > h");
            const double s = 0.5 * (h + smax);
            const double off = 0.5 * (len - (m - 1) * s);
            for (int k = 0; k < m; ++k) pts.push_back(iv.lo + off + s * k);
        }
    } else {
        const double x0 = field_zero_crossing(field, iv, opts);
        const double g = 1.25 * h;
        for (int k = 0; k < m; ++k) pts.push_back(x0 + g * (k - 0.5 * (m - 1)));
        if (std::isfinite(iv.lo) && pts.front() <= iv.lo) {
            const double shift = iv.lo + 0.25 * h - pts.front();
            for (double& p : pts) p += shift;
        }
        if (std::isfinite(iv.hi) && pts.back() >= iv.hi) {
            const double shift = pts.back() - (iv.hi - 0.25 * h);
            for (double& p : pts) p -= shift;
        }
    }
    return pts;
}

}  // namespace detail

/// Equilibrium position of one freed charge on the slot, with all charges of
/// `fixed` held in place: the unique zero of the total-force function, which
/// is strictly decreasing there for a G-convex field.
inline double place_single(const ChargeConfiguration& fixed, const RationalField& field,
                           const Interval& slot, const SolverOptions& opts = {}) {
    if (!check_gconvex(field).is_gconvex)
        throw std::invalid_argument("place_single: field is not G-convex");
    const double box = opts.unbounded_box > 0.0
                           ? opts.unbounded_box
                           : detail::derived_box(static_cast<int>(fixed.points.size()) + 1,
                                                 field.h());
    return detail::place_unchecked(fixed.points, field, slot.lo, slot.hi, field.h(), opts, box);
}

/// Cyclic coordinate descent: each charge in turn moves to its local
/// equilibrium between already-updated left neighbours and not-yet-updated
/// right neighbours. The energy decreases at every half-step; iteration
/// stops when the force residual falls below tolerance.
inline SolverResult solve_equilibrium(const RationalField& field, int n,
                                      const SolverOptions& opts = {},
                                      const std::optional<ChargeConfiguration>& init = {}) {
    if (n < 1) throw std::invalid_argument("solve_equilibrium: n must be >= 1");
    if (!check_gconvex(field).is_gconvex)
        throw std::invalid_argument("solve_equilibrium: field is not G-convex");

    const IntervalSystem& dom = field.domain();
    const double h = field.h();

    std::vector<int> counts(dom.size(), 0);
    if (dom.total_count() > 0) {
        for (std::size_t i = 0; i < dom.size(); ++i) counts[i] = dom.count(i);
        if (dom.total_count() != n)
            throw std::invalid_argument("solve_equilibrium: n disagrees with prescribed counts");
    } else if (dom.size() == 1) {
        counts[0] = n;
    } else {
        throw std::invalid_argument(
            "solve_equilibrium: two-interval domain requires prescribed per-interval counts");
    }

    const ChargeCapacity cap = max_charges(field);
    SolverResult res;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (cap.per_interval[i] && counts[i] > *cap.per_interval[i])
            throw std::invalid_argument("solve_equilibrium: infeasible count " +
                                        std::to_string(counts[i]) + " in " +
                                        dom.interval(i).str());
        if (cap.per_interval[i] && counts[i] == *cap.per_interval[i])
            res.notes.push_back("interval " + dom.interval(i).str() + " filled to capacity ceil(L/h) = " +
                                std::to_string(*cap.per_interval[i]));
    }

    std::vector<double> x;
    if (init) {
        IntervalSystem counted = dom;
        counted.set_counts(counts);
        const ValidationReport v = validate_configuration(*init, counted);
        if (!v) throw std::invalid_argument("solve_equilibrium: invalid init: " + v.violation);
        x = init->points;
    } else {
        for (std::size_t i = 0; i < dom.size(); ++i) {
            const auto part = detail::default_init(field, dom.interval(i), counts[i], opts);
            x.insert(x.end(), part.begin(), part.end());
        }
    }

    // interval index of each charge, fixed by the counts
    std::vector<std::size_t> home(x.size());
    {
        std::size_t j = 0;
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (int k = 0; k < counts[i]; ++k) home[j++] = i;
    }

    const double box = opts.unbounded_box > 0.0 ? opts.unbounded_box : detail::derived_box(n, h);
    ChargeConfiguration cfg{x, h};

    for (long sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
        for (std::size_t j = 0; j < cfg.points.size(); ++j) {
            const Interval& iv = dom.interval(home[j]);
            const double lo = std::max(j > 0 ? cfg.points[j - 1] + h : -kInf, iv.lo);
            const double hi =
                std::min(j + 1 < cfg.points.size() ? cfg.points[j + 1] - h : kInf, iv.hi);
            std::vector<double> fixed;
            fixed.reserve(cfg.points.size() - 1);
            for (std::size_t k = 0; k < cfg.points.size(); ++k)
                if (k != j) fixed.push_back(cfg.points[k]);
            cfg.points[j] = detail::place_unchecked(fixed, field, lo, hi, h, opts, box);
        }
        for (std::size_t j = 0; j + 1 < cfg.points.size(); ++j)
            if (!(cfg.points[j + 1] - cfg.points[j] > h))
                throw std::logic_error("solve_equilibrium: gap invariant violated");

        double maxf = 0.0;
        for (std::size_t j = 0; j < cfg.points.size(); ++j)
            maxf = std::max(maxf, std::abs(total_force(cfg, field, j)));
        res.energy_trace.push_back(energy(cfg, field));
        res.sweeps = sweep;
        res.final_max_force = maxf;
        if (opts.sweep_observer) opts.sweep_observer(cfg);
        if (maxf <= opts.force_tolerance) {
            res.converged = true;
            break;
        }
    }
    res.configuration = std::move(cfg);
    if (!res.converged) res.notes.push_back("max_sweeps reached before force tolerance");
    return res;
}

/// Symmetric-pair variant for a two-interval field that is odd about
/// `center`: pairs (x, 2*center - x) move together, reducing each step to a
/// one-variable monotone root-find. Every iterate is symmetric by
/// construction. Produces the (n, n)-equilibrium.
inline SolverResult solve_equilibrium_symmetric_pairs(const RationalField& field, int n_pairs,
                                                      double center,
                                                      const SolverOptions& opts = {}) {
    if (n_pairs < 1) throw std::invalid_argument("symmetric_pairs: n_pairs must be >= 1");
    const IntervalSystem& dom = field.domain();
    if (dom.size() != 2)
        throw std::invalid_argument("symmetric_pairs: requires a two-interval domain");
    const Interval& lower = dom.interval(0);
    const Interval& upper = dom.interval(1);
    const double h = field.h();
    const double scale = std::max({1.0, std::abs(lower.lo), std::abs(upper.hi)});
    if (std::abs(lower.lo - (2.0 * center - upper.hi)) > 1e-9 * scale ||
        std::abs(lower.hi - (2.0 * center - upper.lo)) > 1e-9 * scale)
        throw std::invalid_argument("symmetric_pairs: intervals are not mirror images about center");
    if (dom.total_count() > 0 && (dom.count(0) != n_pairs || dom.count(1) != n_pairs))
        throw std::invalid_argument("symmetric_pairs: counts disagree with n_pairs");
    if (!check_gconvex(field).is_gconvex)
        throw std::invalid_argument("symmetric_pairs: field is not G-convex");

    // The field must be odd about the centre at mirrored sample points.
    for (int k = 1; k <= 32; ++k) {
        const double t = (upper.hi - upper.lo) * k / 33.0 + (upper.lo - center);
        if (!upper.contains(center + t) || !lower.contains(center - t)) continue;
        const double fp = external_force(field, center + t);
        const double fm = external_force(field, center - t);
        if (std::abs(fp + fm) > 1e-9 * std::max(1.0, std::abs(fp)))
            throw std::invalid_argument("symmetric_pairs: field is not symmetric about center");
    }

    const ChargeCapacity cap = max_charges(field);
    SolverResult res;
    if (cap.per_interval[1] && n_pairs > *cap.per_interval[1])
        throw std::invalid_argument("symmetric_pairs: infeasible pair count");
    if (cap.per_interval[1] && n_pairs == *cap.per_interval[1])
        res.notes.push_back("interval " + upper.str() + " filled to capacity ceil(L/h) = " +
                            std::to_string(*cap.per_interval[1]));

    // distances from the centre of the upper-half charges, ascending
    std::vector<double> t(static_cast<std::size_t>(n_pairs));
    {
        const auto y = detail::default_init(field, upper, n_pairs, opts);
        for (std::size_t j = 0; j < y.size(); ++j) t[j] = y[j] - center;
    }
    const double t_min = upper.lo - center;  // >= h/2 for any admissible geometry
    const double t_max = upper.hi - center;
    const double box = opts.unbounded_box > 0.0 ? opts.unbounded_box
                                                : detail::derived_box(2 * n_pairs, h);

    auto build_config = [&]() {
        ChargeConfiguration cfg;
        cfg.h = h;
        cfg.points.reserve(2 * static_cast<std::size_t>(n_pairs));
        for (std::size_t j = t.size(); j-- > 0;) cfg.points.push_back(center - t[j]);
        for (double tj : t) cfg.points.push_back(center + tj);
        return cfg;
    };

    for (long sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            auto g = [&](double tt) {
                const double y = center + tt;
                double s = 0.0;
                for (std::size_t k = 0; k < t.size(); ++k) {
                    if (k == j) continue;
                    const ForceEvaluation up = pair_force(center + t[k], y, h);
                    const ForceEvaluation dn = pair_force(center - t[k], y, h);
                    if (!up.defined || !dn.defined) return (t[k] < tt) ? kInf : -kInf;
                    s += up.value + dn.value;
                }
                const ForceEvaluation own = pair_force(center - tt, y, h);
                if (!own.defined) return kInf;  // 2t <= h: below the pair bracket
                return s + own.value + detail::guarded_force(field, y);
            };
            const double lo = std::max(j > 0 ? t[j - 1] + h : 0.5 * h, t_min);
            const double hi = std::min(j + 1 < t.size() ? t[j + 1] - h : kInf, t_max);
            t[j] = detail::find_zero_decreasing(g, lo, hi, opts.bracket_shrink, box);
        }
        ChargeConfiguration cfg = build_config();
        for (std::size_t j = 0; j + 1 < cfg.points.size(); ++j)
            if (!(cfg.points[j + 1] - cfg.points[j] > h))
                throw std::logic_error("symmetric_pairs: gap invariant violated");

        double maxf = 0.0;
        for (std::size_t j = 0; j < cfg.points.size(); ++j)
            maxf = std::max(maxf, std::abs(total_force(cfg, field, j)));
        res.energy_trace.push_back(energy(cfg, field));
        res.sweeps = sweep;
        res.final_max_force = maxf;
        if (opts.sweep_observer) opts.sweep_observer(cfg);
        if (maxf <= opts.force_tolerance) {
            res.converged = true;
            res.configuration = std::move(cfg);
            break;
        }
        res.configuration = std::move(cfg);
    }
    if (!res.converged) res.notes.push_back("max_sweeps reached before force tolerance");
    return res;
}

struct FlowCheckReport {
    bool refused = false;
    std::string reason;
    double min_eigenvalue = 0.0;    // of the finite-difference Hessian
    double gershgorin_margin = 0.0; // from the closed-form second derivatives
    bool positive_definite = false;
    int perturbations = 0;
    bool perturbations_increase_energy = false;
};

namespace detail {

inline double smallest_eigenvalue_sym(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 0.0;
    for (int pass = 0; pass < 200; ++pass) {
        std::size_t p = 0, q = 1;
        double big = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(m[i][j]) > big) {
                    big = std::abs(m[i][j]);
                    p = i;
                    q = j;
                }
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(m[i][i]));
        if (n < 2 || big <= 1e-14 * std::max(1.0, scale)) break;
        const double theta = 0.5 * std::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
            const double mkp = m[k][p], mkq = m[k][q];
            m[k][p] = c * mkp - s * mkq;
            m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double mpk = m[p][k], mqk = m[q][k];
            m[p][k] = c * mpk - s * mqk;
            m[q][k] = s * mpk + c * mqk;
        }
    }
    double mn = m[0][0];
    for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, m[i][i]);
    return mn;
}

/// phi'' = -F_phi' = -(1/2h) d/dx log((A+B)/A), strictly positive for a
/// G-convex field.
inline double phi_second_derivative(const RationalField& field, double x) {
    const double a = field.A()(x), s = field.sum()(x);
    const double da = field.A().derivative()(x), ds = field.sum().derivative()(x);
    return -(ds / s - da / a) / (2.0 * field.h());
}

}  // namespace detail

/// Independent confirmation that a converged configuration is a strict local
/// minimum: positive-definite finite-difference Hessian (differentiating the
/// analytic gradient) plus random feasible perturbations that all raise the
/// energy. The Gershgorin margin uses the closed-form second derivatives.
inline FlowCheckReport gradient_flow_check(const RationalField& field, const SolverResult& result,
                                           unsigned seed = 12345) {
    FlowCheckReport rep;
    if (!check_gconvex(field).is_gconvex) {
        rep.refused = true;
        rep.reason = "field is not G-convex";
        return rep;
    }
    if (!result.converged) {
        rep.refused = true;
        rep.reason = "solver result did not converge";
        return rep;
    }
    const ChargeConfiguration& cfg = result.configuration;
    const std::size_t n = cfg.points.size();
    const double h = cfg.h;

    const double step = 1e-5;
    std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        ChargeConfiguration plus = cfg, minus = cfg;
        plus.points[j] += step;
        minus.points[j] -= step;
        const auto gp = energy_gradient(plus, field);
        const auto gm = energy_gradient(minus, field);
        for (std::size_t i = 0; i < n; ++i) H[i][j] = (gp[i] - gm[i]) / (2.0 * step);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (H[i][j] + H[j][i]);
            H[i][j] = H[j][i] = v;
        }
    rep.min_eigenvalue = detail::smallest_eigenvalue_sym(H);
    rep.positive_definite = rep.min_eigenvalue > 0.0;

    double margin = kInf;
    for (std::size_t j = 0; j < n; ++j)
        margin = std::min(margin, 2.0 * detail::phi_second_derivative(field, cfg.points[j]));
    rep.gershgorin_margin = margin;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1e-4, 1e-4);
    const double e0 = energy(cfg, field);
    rep.perturbations_increase_energy = true;
    for (int trial = 0; trial < 20; ++trial) {
        ChargeConfiguration pert = cfg;
        bool feasible = false;
        for (int attempt = 0; attempt < 100 && !feasible; ++attempt) {
            for (std::size_t j = 0; j < n; ++j) pert.points[j] = cfg.points[j] + u(rng);
            feasible = true;
            for (std::size_t j = 0; j + 1 < n; ++j)
                if (!(pert.points[j + 1] - pert.points[j] > h)) feasible = false;
            for (double p : pert.points)
                if (!field.domain().locate(p)) feasible = false;
        }
        if (!feasible) continue;
        ++rep.perturbations;
        if (!(energy(pert, field) > e0)) rep.perturbations_increase_energy = false;
    }
    return rep;
}

}  // namespace eqs

#endif  // EQS_SOLVER_HPP
