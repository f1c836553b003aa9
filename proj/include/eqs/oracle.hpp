#ifndef EQS_ORACLE_HPP
#define EQS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqs/electrostatics.hpp"
#include "eqs/families.hpp"
#include "eqs/field.hpp"
#include "eqs/solver.hpp"

namespace eqs {

namespace detail {

template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

/// Brute-force global energy minimiser for up to three charges: exhaustive
/// search over the gap-feasible simplex on a uniform grid, then a
/// coordinate-descent polish with exact energies. Independent of the force
/// solver; meant to certify it, not to be fast. Unbounded domains need an
/// explicit search box.
inline ChargeConfiguration grid_minimize(const RationalField& field, int n, int resolution,
                                         std::optional<Interval> box = {}) {
    if (n < 1 || n > 3) throw std::invalid_argument("grid_minimize: n must be 1, 2 or 3");
    if (resolution < 8) throw std::invalid_argument("grid_minimize: resolution too small");
    if (field.domain().size() != 1)
        throw std::invalid_argument("grid_minimize: single-interval domains only");
    const Interval dom = field.domain().interval(0);
    double lo = dom.lo, hi = dom.hi;
    if (box) {
        lo = std::max(lo, box->lo);
        hi = std::min(hi, box->hi);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("grid_minimize: bounded domain or search box required");

    const double h = field.h();
    const double step = (hi - lo) / resolution;
    std::vector<double> xs(static_cast<std::size_t>(resolution));
    std::vector<double> phi(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + (i + 0.5) * step;
        phi[static_cast<std::size_t>(i)] = field_potential(field, xs[static_cast<std::size_t>(i)]);
    }
    const int jump = static_cast<int>(std::floor(h / step)) + 1;  // min index gap with x-gap > h

    double best = kInf;
    std::vector<int> arg;
    auto consider = [&](double e, std::initializer_list<int> idx) {
        if (e < best) {
            best = e;
            arg.assign(idx);
        }
    };
    if (n == 1) {
        for (int i = 0; i < resolution; ++i) consider(2.0 * phi[static_cast<std::size_t>(i)], {i});
    } else if (n == 2) {
        for (int i = 0; i < resolution; ++i) {
            for (int j = i + jump; j < resolution; ++j) {
                const std::size_t iu = static_cast<std::size_t>(i), ju = static_cast<std::size_t>(j);
                if (!(xs[ju] - xs[iu] > h)) continue;
                const double e =
                    2.0 * pair_potential(xs[iu], xs[ju], h) + 2.0 * (phi[iu] + phi[ju]);
                consider(e, {i, j});
            }
        }
    } else {
        for (int i = 0; i < resolution; ++i) {
            const std::size_t iu = static_cast<std::size_t>(i);
            for (int j = i + jump; j < resolution; ++j) {
                const std::size_t ju = static_cast<std::size_t>(j);
                if (!(xs[ju] - xs[iu] > h)) continue;
                const double vij = pair_potential(xs[iu], xs[ju], h);
                for (int k = j + jump; k < resolution; ++k) {
                    const std::size_t ku = static_cast<std::size_t>(k);
                    if (!(xs[ku] - xs[ju] > h)) continue;
                    const double e = 2.0 * (vij + pair_potential(xs[iu], xs[ku], h) +
                                            pair_potential(xs[ju], xs[ku], h)) +
                                     2.0 * (phi[iu] + phi[ju] + phi[ku]);
                    consider(e, {i, j, k});
                }
            }
        }
    }
    if (arg.empty()) throw std::invalid_argument("grid_minimize: no feasible grid configuration");

    ChargeConfiguration cfg;
    cfg.h = h;
    for (int i : arg) cfg.points.push_back(xs[static_cast<std::size_t>(i)]);

    // coordinate-descent polish on the exact energy
    const double margin = 1e-12 * std::max(1.0, std::abs(hi));
    for (int round = 0; round < 60; ++round) {
        double moved = 0.0;
        for (std::size_t j = 0; j < cfg.points.size(); ++j) {
            const double slo =
                std::max(j > 0 ? cfg.points[j - 1] + h + margin : lo + margin, lo + margin);
            const double shi = std::min(
                j + 1 < cfg.points.size() ? cfg.points[j + 1] - h - margin : hi - margin,
                hi - margin);
            if (!(slo < shi)) continue;
            auto f = [&](double t) {
                ChargeConfiguration trial = cfg;
                trial.points[j] = t;
                return energy(trial, field);
            };
            const double xnew = detail::golden_min(f, slo, shi, 1e-11 * std::max(1.0, std::abs(shi)));
            moved = std::max(moved, std::abs(xnew - cfg.points[j]));
            cfg.points[j] = xnew;
        }
        if (moved < 1e-10) break;
    }
    return cfg;
}

/// Strict alternation of an n-point and an (n+1)-point configuration:
/// u_1 < l_1 < u_2 < ... < l_n < u_{n+1}.
inline bool interlacing_check(const ChargeConfiguration& lower, const ChargeConfiguration& upper) {
    if (upper.points.size() != lower.points.size() + 1)
        throw std::invalid_argument("interlacing_check: |upper| must be |lower| + 1");
    for (std::size_t j = 0; j < lower.points.size(); ++j) {
        if (!(upper.points[j] < lower.points[j])) return false;
        if (!(lower.points[j] < upper.points[j + 1])) return false;
    }
    return true;
}

struct SweepEntry {
    std::string label;
    bool hypothesis_established = false;  // field comparison holds pointwise on the grid
    bool conclusion_holds = false;        // strict componentwise root ordering
    double min_force_gap = 0.0;           // worst pointwise field-force margin
    double min_root_gap = 0.0;            // worst componentwise root margin
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    bool all_hypotheses = true;
    bool all_conclusions = true;
};

namespace detail {

/// Positive-half roots for quadratic families, full root list otherwise.
inline std::vector<double> comparable_roots(const FamilySpec& spec, const SolverOptions& opts) {
    const RationalField field = field_of(spec);
    if (spec.quadratic()) {
        const SolverResult r = solve_equilibrium_symmetric_pairs(field, spec.n, spec.center(), opts);
        return {r.configuration.points.end() - spec.n, r.configuration.points.end()};
    }
    const SolverResult r = solve_equilibrium(field, spec.n, opts);
    return r.configuration.points;
}

}  // namespace detail

/// Verifies, for each consecutive pair of specs, both halves of the root
/// monotonicity corollary: first that the external forces compare pointwise
/// on the shared window (the hypothesis), then that the equilibrium roots
/// are strictly ordered componentwise (the conclusion). A failed hypothesis
/// marks the entry but the conclusion is still reported.
inline SweepReport monotonicity_sweep(const std::vector<FamilySpec>& specs, bool expect_increasing,
                                      const SolverOptions& opts = {}) {
    SweepReport rep;
    if (specs.size() < 2) return rep;
    std::vector<std::vector<double>> roots;
    std::vector<RationalField> fields;
    for (const FamilySpec& s : specs) {
        fields.push_back(field_of(s));
        roots.push_back(detail::comparable_roots(s, opts));
    }
    for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
        SweepEntry e;
        e.label = specs[i].label() + " vs " + specs[i + 1].label();
        const RationalField& f1 = fields[i];
        const RationalField& f2 = fields[i + 1];
        // compare on the window of the quadratic families' positive interval,
        // or the single interval otherwise
        const Interval w1 = f1.domain().interval(f1.domain().size() - 1);
        const Interval w2 = f2.domain().interval(f2.domain().size() - 1);

        const double scale = std::max({1.0, std::abs(w1.lo), std::abs(w1.hi)});
        bool layout_ok;
        Interval probe = w1;
        if (expect_increasing) {
            layout_ok = std::abs(w1.lo - w2.lo) <= 1e-9 * scale && w1.hi <= w2.hi + 1e-9 * scale;
        } else {
            layout_ok = std::abs(w1.hi - w2.hi) <= 1e-9 * scale && w2.lo >= w1.lo - 1e-9 * scale;
            probe = w2;
        }
        double min_gap = kInf;
        if (layout_ok) {
            auto [plo, phi_] = detail::sampling_window(probe, {});
            const int grid = 256;
            for (int k = 1; k <= grid; ++k) {
                const double x = plo + (phi_ - plo) * k / (grid + 1.0);
                if (!probe.contains(x)) continue;
                double gap;
                try {
                    const double e1 = external_force(f1, x);
                    const double e2 = external_force(f2, x);
                    gap = expect_increasing ? e2 - e1 : e1 - e2;
                } catch (const std::domain_error&) {
                    continue;
                }
                min_gap = std::min(min_gap, gap);
            }
        }
        e.min_force_gap = std::isfinite(min_gap) ? min_gap : 0.0;
        e.hypothesis_established = layout_ok && min_gap > 0.0;

        const auto& r1 = roots[i];
        const auto& r2 = roots[i + 1];
        e.conclusion_holds = r1.size() == r2.size();
        double rg = kInf;
        for (std::size_t j = 0; j < std::min(r1.size(), r2.size()); ++j) {
            const double d = expect_increasing ? r2[j] - r1[j] : r1[j] - r2[j];
            rg = std::min(rg, d);
            if (!(d > 0.0)) e.conclusion_holds = false;
        }
        e.min_root_gap = std::isfinite(rg) ? rg : 0.0;

        rep.all_hypotheses = rep.all_hypotheses && e.hypothesis_established;
        rep.all_conclusions = rep.all_conclusions && e.conclusion_holds;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace eqs

#endif  // EQS_ORACLE_HPP
