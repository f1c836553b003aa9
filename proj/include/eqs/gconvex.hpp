#ifndef EQS_GCONVEX_HPP
#define EQS_GCONVEX_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eqs/electrostatics.hpp"
#include "eqs/field.hpp"

namespace eqs {

struct IntervalFinding {
    bool positive = false;       // 1 + B/A > 0 on the refined grid
    bool decreasing = false;     // (A+B)'A - (A+B)A' <= 0 on the refined grid
    bool left_endpoint = false;  // A(a) = 0, or the -inf limit lies in (1, inf]
    bool right_endpoint = false; // (A+B)(b) = 0, or the +inf limit lies in [0, 1)
    std::optional<double> witness;  // sample point of the first violation
    std::string detail;

    bool all() const { return positive && decreasing && left_endpoint && right_endpoint; }
};

struct GConvexReport {
    bool is_gconvex = false;
    std::vector<IntervalFinding> findings;
};

namespace detail {

/// Limit of (A+B)/A at +inf (to_plus) or -inf, decided from degrees and
/// leading coefficients. Returns +-inf for diverging ratios.
inline double ratio_limit_at_infinity(const Polynomial& sum, const Polynomial& a, bool to_plus) {
    const int ds = sum.degree(), da = a.degree();
    if (sum.is_zero()) return 0.0;
    if (ds < da) return 0.0;
    const double q = sum.leading() / a.leading();
    if (ds == da) return q;
    const int parity = (ds - da) % 2;
    double sign = q > 0 ? 1.0 : -1.0;
    if (!to_plus && parity == 1) sign = -sign;
    return sign * kInf;
}

inline IntervalFinding check_interval(const RationalField& field, const Interval& iv) {
    IntervalFinding f;
    const Polynomial& a = field.A();
    const Polynomial& sum = field.sum();
    const Polynomial deriv_num = sum.derivative() * a - sum * a.derivative();

    std::vector<double> marks = field.landmarks();
    const std::vector<double> droots = real_roots(deriv_num);
    marks.insert(marks.end(), droots.begin(), droots.end());
    // Midpoints between consecutive sign-change candidates of the derivative
    // numerator give a sample inside every piece of constant sign.
    std::vector<double> extra;
    {
        std::vector<double> ds = droots;
        std::sort(ds.begin(), ds.end());
        for (std::size_t i = 0; i + 1 < ds.size(); ++i) extra.push_back(0.5 * (ds[i] + ds[i + 1]));
    }

    std::vector<double> pts = detail::sample_points(iv, marks, 2048);
    for (double m : extra)
        if (iv.contains(m)) pts.push_back(m);

    f.positive = true;
    f.decreasing = true;
    for (double x : pts) {
        const double av = a(x), sv = sum(x);
        const bool near_root = std::abs(av) <= 1e-12 * a.eval_scale(x) ||
                               std::abs(sv) <= 1e-12 * sum.eval_scale(x);
        if (!near_root && !(av * sv > 0.0) && f.positive) {
            f.positive = false;
            f.witness = x;
            f.detail = "1 + B/A not positive at x = " + std::to_string(x);
        }
        const double dv = deriv_num(x);
        if (dv > 1e-12 * std::max(1.0, deriv_num.eval_scale(x)) && f.decreasing) {
            f.decreasing = false;
            if (!f.witness) f.witness = x;
            if (f.detail.empty()) f.detail = "1 + B/A increasing at x = " + std::to_string(x);
        }
    }

    // Endpoint conditions, scale-free via the coefficient profile.
    if (std::isfinite(iv.lo)) {
        f.left_endpoint = std::abs(a(iv.lo)) <= 1e-9 * std::max(1.0, a.eval_scale(iv.lo));
        if (!f.left_endpoint && f.detail.empty()) f.detail = "A does not vanish at left endpoint";
    } else {
        const double lim = ratio_limit_at_infinity(sum, a, /*to_plus=*/false);
        f.left_endpoint = lim > 1.0;  // (1, +inf]
        if (!f.left_endpoint && f.detail.empty())
            f.detail = "limit of (A+B)/A at -inf not in (1, inf]";
    }
    if (std::isfinite(iv.hi)) {
        f.right_endpoint = std::abs(sum(iv.hi)) <= 1e-9 * std::max(1.0, sum.eval_scale(iv.hi));
        if (!f.right_endpoint && f.detail.empty())
            f.detail = "A + B does not vanish at right endpoint";
    } else {
        const double lim = ratio_limit_at_infinity(sum, a, /*to_plus=*/true);
        f.right_endpoint = lim >= 0.0 && lim < 1.0;
        if (!f.right_endpoint && f.detail.empty())
            f.detail = "limit of (A+B)/A at +inf not in [0, 1)";
    }
    return f;
}

}  // namespace detail

/// Decides whether the field is G-convex on its interval system: 1 + B/A
/// positive and decreasing on each interval, with the prescribed endpoint or
/// limit conditions. All defects are findings, nothing throws.
inline GConvexReport check_gconvex(const RationalField& field) {
    GConvexReport rep;
    rep.is_gconvex = true;
    for (std::size_t i = 0; i < field.domain().size(); ++i) {
        rep.findings.push_back(detail::check_interval(field, field.domain().interval(i)));
        if (!rep.findings.back().all()) rep.is_gconvex = false;
    }
    return rep;
}

/// Per-interval capacity ceil(L/h); nullopt marks an unbounded interval.
struct ChargeCapacity {
    std::vector<std::optional<long long>> per_interval;
    std::optional<long long> total;  // nullopt when any interval is unbounded
};

inline ChargeCapacity max_charges(const RationalField& field) {
    ChargeCapacity cap;
    long long total = 0;
    bool bounded = true;
    for (std::size_t i = 0; i < field.domain().size(); ++i) {
        const Interval& iv = field.domain().interval(i);
        if (!iv.bounded()) {
            cap.per_interval.push_back(std::nullopt);
            bounded = false;
        } else {
            const long long m = static_cast<long long>(std::ceil(iv.length() / field.h()));
            cap.per_interval.push_back(m);
            total += m;
        }
    }
    if (bounded) cap.total = total;
    return cap;
}

/// All maximal intervals between consecutive roots/poles of (A+B)/A on which
/// the field is G-convex, plus mirror-symmetric two-interval systems whose
/// halves are both G-convex and whose force is odd about the common centre.
inline std::vector<IntervalSystem> enumerate_gconvex_windows(const Polynomial& a,
                                                             const Polynomial& b, double h) {
    if (a.degree() > 5 || b.degree() > 5)
        throw std::invalid_argument("enumerate_gconvex_windows: degree above 5 unsupported");

    std::vector<double> cuts = real_roots(a);
    for (double r : real_roots(a + b)) cuts.push_back(r);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double u, double v) { return std::abs(u - v) <= 1e-11 * std::max(1.0, std::abs(u)); }),
               cuts.end());
    if (cuts.empty()) return {};  // (a, b) = R is not an admissible domain

    std::vector<Interval> candidates;
    candidates.emplace_back(-kInf, cuts.front());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] > 1e-9) candidates.emplace_back(cuts[i], cuts[i + 1]);
    }
    candidates.emplace_back(cuts.back(), kInf);

    std::vector<Interval> good;
    for (const Interval& c : candidates) {
        try {
            RationalField f(a, b, h, IntervalSystem(c));
            if (check_gconvex(f).is_gconvex) good.push_back(c);
        } catch (const std::invalid_argument&) {
            // positivity fails on this window
        }
    }

    std::vector<IntervalSystem> out;
    for (const Interval& g : good) out.emplace_back(g);

    // Symmetric pairs: bounded windows that mirror each other about a centre
    // where the force is odd, as in the quadratic-lattice fields.
    for (std::size_t i = 0; i < good.size(); ++i) {
        for (std::size_t j = i + 1; j < good.size(); ++j) {
            const Interval &lo = good[i], &hi = good[j];
            if (!lo.bounded() || !hi.bounded() || !(lo.hi <= hi.lo)) continue;
            const double c = 0.5 * (lo.lo + hi.hi);
            const double scale = std::max({1.0, std::abs(lo.lo), std::abs(hi.hi)});
            if (std::abs((lo.hi - c) + (hi.lo - c)) > 1e-9 * scale) continue;
            RationalField f(a, b, h, IntervalSystem(lo, hi));
            bool odd = true;
            const double tmax = hi.hi - c;
            const double tmin = hi.lo - c;
            for (int k = 1; k <= 32 && odd; ++k) {
                const double t = tmin + (tmax - tmin) * k / 33.0;
                if (!hi.contains(c + t) || !lo.contains(c - t)) continue;
                const double fp = external_force(f, c + t);
                const double fm = external_force(f, c - t);
                if (std::abs(fp + fm) > 1e-9 * std::max(1.0, std::abs(fp))) odd = false;
            }
            if (odd) out.emplace_back(lo, hi);
        }
    }
    return out;
}

}  // namespace eqs

#endif  // EQS_GCONVEX_HPP
