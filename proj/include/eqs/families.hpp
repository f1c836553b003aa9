#ifndef EQS_FAMILIES_HPP
#define EQS_FAMILIES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqs/electrostatics.hpp"
#include "eqs/field.hpp"
#include "eqs/interval.hpp"
#include "eqs/polynomial.hpp"

namespace eqs {

enum class Family { charlier, krawtchouk, meixner, hahn, dual_hahn, racah };

/// Parameter regime a spec falls into. Standard regimes carry a positive
/// orthogonality measure; the others only define the field and the
/// difference equation.
enum class Regime {
    standard,
    meixner_c_above_one,  // beta > 0, c > 1: window (-inf, -beta)
    meixner_negative,     // c < 0, beta < 0: window (0, -beta)
    hahn_row2,            // N > 0, alpha <= -N-1, beta <= -N-1: (0, N)
    hahn_row3,            // N > 0, -N-1 <= alpha < -1, beta <= -N-1: (0, -alpha-1)
    hahn_row4,            // N > 0, alpha <= -N-1, -N-1 <= beta < -1: (N+beta+1, N)
    hahn_row5,            // N > 0, alpha,beta >= -N-1, alpha+beta < -N-2: (N+beta+1, -alpha-1)
    hahn_row6,            // N < 0, alpha < -1, alpha+beta > -N-2: (0, -alpha-1)
    hahn_row7,            // N < 0, beta < -1, alpha+beta > -N-2: (N+beta+1, N)
    hahn_row8,            // N < 0, alpha,beta > -1, alpha+beta < -N-2: (N+beta+1, -alpha-1)
};

namespace detail {

inline bool is_natural(double v) {
    return v >= 1.0 && std::abs(v - std::round(v)) < 1e-12 * std::max(1.0, v);
}

inline double pochhammer(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

}  // namespace detail

/// Tagged parameter record for one of the six discrete families.
struct FamilySpec {
    Family family = Family::charlier;
    int n = 0;        // polynomial degree
    double a = 0.0;   // charlier
    double p = 0.0;   // krawtchouk
    double N = 0.0;   // krawtchouk, hahn, dual hahn, racah
    double beta = 0.0;
    double c = 0.0;   // meixner
    double alpha = 0.0;
    double gamma = 0.0;
    double delta = 0.0;

    static FamilySpec charlier_spec(double a, int n) {
        FamilySpec s;
        s.family = Family::charlier;
        s.a = a;
        s.n = n;
        return s;
    }
    static FamilySpec krawtchouk_spec(double p, double N, int n) {
        FamilySpec s;
        s.family = Family::krawtchouk;
        s.p = p;
        s.N = N;
        s.n = n;
        return s;
    }
    static FamilySpec meixner_spec(double beta, double c, int n) {
        FamilySpec s;
        s.family = Family::meixner;
        s.beta = beta;
        s.c = c;
        s.n = n;
        return s;
    }
    static FamilySpec hahn_spec(double alpha, double beta, double N, int n) {
        FamilySpec s;
        s.family = Family::hahn;
        s.alpha = alpha;
        s.beta = beta;
        s.N = N;
        s.n = n;
        return s;
    }
    static FamilySpec dual_hahn_spec(double gamma, double delta, double N, int n) {
        FamilySpec s;
        s.family = Family::dual_hahn;
        s.gamma = gamma;
        s.delta = delta;
        s.N = N;
        s.n = n;
        return s;
    }
    /// Racah in the regime alpha = -N-1, gamma, delta >= 0, beta > gamma + N.
    static FamilySpec racah_spec(double N, double beta, double gamma, double delta, int n) {
        FamilySpec s;
        s.family = Family::racah;
        s.N = N;
        s.alpha = -N - 1.0;
        s.beta = beta;
        s.gamma = gamma;
        s.delta = delta;
        s.n = n;
        return s;
    }

    bool quadratic() const { return family == Family::dual_hahn || family == Family::racah; }

    /// Lattice centre -(gamma+delta+1)/2 for the quadratic families.
    double center() const { return -0.5 * (gamma + delta + 1.0); }

    Regime regime() const {
        switch (family) {
            case Family::charlier:
                if (a > 0.0 && n >= 1) return Regime::standard;
                throw std::invalid_argument("charlier: requires a > 0, n >= 1");
            case Family::krawtchouk:
                if (p > 0.0 && p < 1.0 && detail::is_natural(N) && n >= 1 && n <= N)
                    return Regime::standard;
                throw std::invalid_argument("krawtchouk: requires p in (0,1), N natural, 1 <= n <= N");
            case Family::meixner:
                if (n < 1) throw std::invalid_argument("meixner: n >= 1 required");
                if (beta > 0.0 && c > 0.0 && c < 1.0) return Regime::standard;
                if (beta > 0.0 && c > 1.0) return Regime::meixner_c_above_one;
                if (beta < 0.0 && c < 0.0) return Regime::meixner_negative;
                throw std::invalid_argument("meixner: unsupported (beta, c) combination");
            case Family::hahn: {
                if (n < 1) throw std::invalid_argument("hahn: n >= 1 required");
                if (N > 0.0) {
                    if (alpha > -1.0 && beta > -1.0) {
                        if (detail::is_natural(N) && n <= N) return Regime::standard;
                        throw std::invalid_argument("hahn: standard regime needs N natural, n <= N");
                    }
                    if (alpha <= -N - 1.0 && beta <= -N - 1.0) return Regime::hahn_row2;
                    if (alpha >= -N - 1.0 && alpha < -1.0 && beta <= -N - 1.0)
                        return Regime::hahn_row3;
                    if (alpha <= -N - 1.0 && beta >= -N - 1.0 && beta < -1.0)
                        return Regime::hahn_row4;
                    if (alpha >= -N - 1.0 && beta >= -N - 1.0 && alpha + beta < -N - 2.0)
                        return Regime::hahn_row5;
                } else if (N < 0.0) {
                    if (alpha < -1.0 && alpha + beta > -N - 2.0) return Regime::hahn_row6;
                    if (beta < -1.0 && alpha + beta > -N - 2.0) return Regime::hahn_row7;
                    if (alpha > -1.0 && beta > -1.0 && alpha + beta < -N - 2.0)
                        return Regime::hahn_row8;
                }
                throw std::invalid_argument("hahn: parameters match no G-convex window");
            }
            case Family::dual_hahn:
                if (gamma >= 0.0 && delta >= 0.0 && detail::is_natural(N) && n >= 1 && n <= N)
                    return Regime::standard;
                throw std::invalid_argument("dual hahn: requires gamma, delta >= 0, N natural, n <= N");
            case Family::racah:
                if (gamma >= 0.0 && delta >= 0.0 && detail::is_natural(N) && beta > gamma + N &&
                    n >= 1 && n <= N)
                    return Regime::standard;
                throw std::invalid_argument(
                    "racah: requires alpha = -N-1, gamma, delta >= 0, beta > gamma + N, n <= N");
        }
        throw std::logic_error("unreachable");
    }

    bool standard() const { return regime() == Regime::standard; }

    /// The eigen-polynomial C with A DN p + B D p + C p = 0 for this family's
    /// stated A and B. Constant n for Charlier and Krawtchouk; the Meixner and
    /// Hahn constants pick up the B-coefficient scaling; cubic in x on the
    /// quadratic lattice.
    Polynomial expected_C() const {
        const double nn = n;
        switch (family) {
            case Family::charlier:
            case Family::krawtchouk:
                return Polynomial::constant(nn);
            case Family::meixner:
                return Polynomial::constant(nn * (1.0 - c));
            case Family::hahn:
                return Polynomial::constant(-nn * (nn + alpha + beta + 1.0));
            case Family::dual_hahn:
            case Family::racah: {
                const double gd = gamma + delta;
                Polynomial q = Polynomial{{gd, 2.0}} * Polynomial{{gd + 1.0, 2.0}} *
                               Polynomial{{gd + 2.0, 2.0}};
                return nn * q;
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string label() const {
        switch (family) {
            case Family::charlier:
                return "charlier(a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")";
            case Family::krawtchouk:
                return "krawtchouk(p=" + std::to_string(p) + ", N=" + std::to_string(N) +
                       ", n=" + std::to_string(n) + ")";
            case Family::meixner:
                return "meixner(beta=" + std::to_string(beta) + ", c=" + std::to_string(c) +
                       ", n=" + std::to_string(n) + ")";
            case Family::hahn:
                return "hahn(alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                       ", N=" + std::to_string(N) + ", n=" + std::to_string(n) + ")";
            case Family::dual_hahn:
                return "dual_hahn(gamma=" + std::to_string(gamma) + ", delta=" +
                       std::to_string(delta) + ", N=" + std::to_string(N) + ", n=" +
                       std::to_string(n) + ")";
            case Family::racah:
                return "racah(N=" + std::to_string(N) + ", beta=" + std::to_string(beta) +
                       ", gamma=" + std::to_string(gamma) + ", delta=" + std::to_string(delta) +
                       ", n=" + std::to_string(n) + ")";
        }
        return "?";
    }
};

/// Node lattice carrying the orthogonality measure: xi_j = j on the uniform
/// lattice, xi_j = lambda(j) = j(j + gamma + delta + 1) on the quadratic one.
struct Lattice {
    bool quadratic = false;
    double shift = 0.0;  // gamma + delta + 1

    double node(int j) const {
        const double x = j;
        return quadratic ? x * (x + shift) : x;
    }
};

inline Lattice lattice_of(const FamilySpec& spec) {
    if (!spec.quadratic()) return {false, 0.0};
    const double shift = spec.gamma + spec.delta + 1.0;
    if (shift < 0.5)
        throw std::invalid_argument("lattice_of: quadratic lattice needs gamma+delta+1 >= 1/2");
    return {true, shift};
}

namespace detail {

inline int support_max(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::charlier:
        case Family::meixner: return -1;  // infinite
        default: return static_cast<int>(std::llround(spec.N));
    }
}

struct FamilyCoeffs {
    Polynomial A;
    Polynomial sum;  // A + B
};

inline FamilyCoeffs family_coeffs(const FamilySpec& spec) {
    const Polynomial x{{0.0, 1.0}};
    switch (spec.family) {
        case Family::charlier: return {x, Polynomial::constant(spec.a)};
        case Family::krawtchouk:
            return {Polynomial{{0.0, 1.0 - spec.p}},
                    Polynomial{{spec.p * spec.N, -spec.p}}};  // p (N - x)
        case Family::meixner:
            return {x, Polynomial{{spec.c * spec.beta, spec.c}}};  // c (x + beta)
        case Family::hahn:
            return {x * Polynomial{{-spec.beta - spec.N - 1.0, 1.0}},
                    Polynomial{{spec.alpha + 1.0, 1.0}} * Polynomial{{-spec.N, 1.0}}};
        case Family::dual_hahn: {
            const double g = spec.gamma, d = spec.delta, N = spec.N;
            return {x * Polynomial{{g + d + N + 1.0, 1.0}} * Polynomial{{d, 1.0}} *
                        Polynomial{{g + d + 2.0, 2.0}},
                    Polynomial{{g + 1.0, 1.0}} * Polynomial{{g + d + 1.0, 1.0}} *
                        Polynomial{{N, -1.0}} * Polynomial{{g + d, 2.0}}};
        }
        case Family::racah: {
            const double al = spec.alpha, be = spec.beta, g = spec.gamma, d = spec.delta;
            return {x * Polynomial{{-be + g, 1.0}} * Polynomial{{d, 1.0}} *
                        Polynomial{{-al + g + d, 1.0}} * Polynomial{{g + d + 2.0, 2.0}},
                    Polynomial{{al + 1.0, 1.0}} * Polynomial{{g + 1.0, 1.0}} *
                        Polynomial{{be + d + 1.0, 1.0}} * Polynomial{{g + d + 1.0, 1.0}} *
                        Polynomial{{g + d, 2.0}}};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Difference-equation coefficients and G-convex window(s) of the family, as
/// a ready-to-solve field. h defaults to the unit lattice spacing.
inline RationalField field_of(const FamilySpec& spec, double h = 1.0) {
    const Regime reg = spec.regime();
    const auto [a_poly, sum] = detail::family_coeffs(spec);
    const Polynomial b_poly = sum - a_poly;
    switch (spec.family) {
        case Family::charlier:
            return {a_poly, b_poly, h, IntervalSystem(Interval(0.0, kInf), spec.n)};
        case Family::krawtchouk:
            return {a_poly, b_poly, h, IntervalSystem(Interval(0.0, spec.N), spec.n)};
        case Family::meixner: {
            Interval iv = (reg == Regime::standard) ? Interval(0.0, kInf)
                          : (reg == Regime::meixner_c_above_one)
                              ? Interval(-kInf, -spec.beta)
                              : Interval(0.0, -spec.beta);
            return {a_poly, b_poly, h, IntervalSystem(iv, spec.n)};
        }
        case Family::hahn: {
            double lo = 0.0, hi = spec.N;
            switch (reg) {
                case Regime::standard:
                case Regime::hahn_row2: break;
                case Regime::hahn_row3:
                case Regime::hahn_row6: hi = -spec.alpha - 1.0; break;
                case Regime::hahn_row4:
                case Regime::hahn_row7: lo = spec.N + spec.beta + 1.0; break;
                case Regime::hahn_row5:
                case Regime::hahn_row8:
                    lo = spec.N + spec.beta + 1.0;
                    hi = -spec.alpha - 1.0;
                    break;
                default: break;
            }
            return {a_poly, b_poly, h, IntervalSystem(Interval(lo, hi), spec.n)};
        }
        case Family::dual_hahn: {
            const double g = spec.gamma, d = spec.delta, N = spec.N;
            return {a_poly, b_poly, h,
                    IntervalSystem(Interval(-g - d - N - 1.0, -g - d - 1.0), Interval(0.0, N),
                                   spec.n, spec.n)};
        }
        case Family::racah: {
            const double g = spec.gamma, d = spec.delta, N = spec.N;
            return {a_poly, b_poly, h,
                    IntervalSystem(Interval(-N - g - d - 1.0, -g - d - 1.0), Interval(0.0, N),
                                   spec.n, spec.n)};
        }
    }
    throw std::logic_error("unreachable");
}

/// Terminating hypergeometric sum of the family's representation, evaluated
/// at the lattice variable x with running term ratios. Throws when a
/// denominator Pochhammer vanishes before the series terminates.
inline double hyp_eval(const FamilySpec& spec, double x) {
    std::vector<double> num, den;
    double z = 1.0;
    const double nn = spec.n;
    switch (spec.family) {
        case Family::charlier:
            num = {-nn, -x};
            z = -1.0 / spec.a;
            break;
        case Family::krawtchouk:
            num = {-nn, -x};
            den = {-spec.N};
            z = 1.0 / spec.p;
            break;
        case Family::meixner:
            num = {-nn, -x};
            den = {spec.beta};
            z = 1.0 - 1.0 / spec.c;
            break;
        case Family::hahn:
            num = {-nn, nn + spec.alpha + spec.beta + 1.0, -x};
            den = {spec.alpha + 1.0, -spec.N};
            break;
        case Family::dual_hahn:
            num = {-nn, -x, x + spec.gamma + spec.delta + 1.0};
            den = {spec.gamma + 1.0, -spec.N};
            break;
        case Family::racah:
            num = {-nn, nn + spec.alpha + spec.beta + 1.0, -x,
                   x + spec.gamma + spec.delta + 1.0};
            den = {spec.alpha + 1.0, spec.beta + spec.delta + 1.0, spec.gamma + 1.0};
            break;
    }
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < spec.n; ++k) {
        double ratio = z / (k + 1.0);
        for (double v : num) ratio *= v + k;
        for (double v : den) {
            const double dv = v + k;
            if (dv == 0.0)
                throw std::domain_error("hyp_eval: denominator Pochhammer vanishes (parameter degeneracy)");
            ratio /= dv;
        }
        term *= ratio;
        sum += term;
    }
    return sum;
}

/// Weight of the orthogonality measure at node j (standard regimes). Uniform
/// families run the Pearson product w(k) = w(k-1) (A+B)(k-1)/A(k) in log
/// space, normalised to the family's closed form at j = 0; the quadratic
/// families use their measure displays directly.
inline double weight(const FamilySpec& spec, int j) {
    if (!spec.standard()) throw std::domain_error("weight: standard regimes only");
    const int jmax = detail::support_max(spec);
    if (j < 0 || (jmax >= 0 && j > jmax)) throw std::out_of_range("weight: node outside support");

    if (!spec.quadratic()) {
        double w0;
        switch (spec.family) {
            case Family::charlier:
            case Family::meixner: w0 = 1.0; break;
            case Family::krawtchouk: w0 = std::pow(1.0 - spec.p, spec.N); break;
            case Family::hahn:
                // binom(beta + N, N)
                w0 = std::exp(std::lgamma(spec.beta + spec.N + 1.0) -
                              std::lgamma(spec.N + 1.0) - std::lgamma(spec.beta + 1.0));
                break;
            default: w0 = 1.0; break;
        }
        const auto [a_poly, sum] = detail::family_coeffs(spec);
        double logw = std::log(w0);
        double sign = 1.0;
        for (int k = 1; k <= j; ++k) {
            const double numv = sum(k - 1.0);
            const double denv = a_poly(static_cast<double>(k));
            if (numv == 0.0) return 0.0;
            sign *= (numv < 0.0 ? -1.0 : 1.0) * (denv < 0.0 ? -1.0 : 1.0);
            logw += std::log(std::abs(numv)) - std::log(std::abs(denv));
        }
        return sign * std::exp(logw);
    }

    const double g = spec.gamma, d = spec.delta, N = spec.N;
    if (spec.family == Family::dual_hahn) {
        // (-1)^j (-N)_j = N! / (N-j)!
        const double falling = std::exp(std::lgamma(N + 1.0) - std::lgamma(N - j + 1.0));
        return falling * detail::pochhammer(g + 1.0, j) * (2.0 * j + g + d + 1.0) /
               (std::exp(std::lgamma(j + 1.0)) * detail::pochhammer(j + g + d + 1.0,
                                                                    static_cast<int>(N) + 1) *
                detail::pochhammer(d + 1.0, j));
    }
    const double al = spec.alpha, be = spec.beta;
    return detail::pochhammer(al + 1.0, j) * detail::pochhammer(be + d + 1.0, j) *
           detail::pochhammer(g + 1.0, j) * detail::pochhammer(g + d + 1.0, j) *
           detail::pochhammer(0.5 * (g + d + 3.0), j) /
           (std::exp(std::lgamma(j + 1.0)) * detail::pochhammer(-al + g + d + 1.0, j) *
            detail::pochhammer(-be + g + 1.0, j) * detail::pochhammer(d + 1.0, j) *
            detail::pochhammer(0.5 * (g + d + 1.0), j));
}

/// Largest normalised moment defect: max over k < n of
/// |sum_j p(xi_j) xi_j^k w_j| / sum_j |p(xi_j) xi_j^k| w_j. Standard regimes
/// only; infinite supports are truncated once the tail stops contributing.
inline double orthogonality_residual(const FamilySpec& spec) {
    if (!spec.standard())
        throw std::domain_error("orthogonality_residual: no positive measure outside the standard regime");
    const Lattice lat = lattice_of(spec);
    const int n = spec.n;
    if (n < 1) return 0.0;
    std::vector<double> num(static_cast<std::size_t>(n), 0.0);
    std::vector<double> den(static_cast<std::size_t>(n), 0.0);
    const int jmax = detail::support_max(spec);
    int quiet = 0;
    for (int j = 0; jmax >= 0 ? j <= jmax : true; ++j) {
        const double w = weight(spec, j);
        const double pv = hyp_eval(spec, j);
        const double xi = lat.node(j);
        double pw = std::abs(pv) * w;
        double rel = 0.0;
        double xik = 1.0;
        for (int k = 0; k < n; ++k) {
            num[static_cast<std::size_t>(k)] += pv * xik * w;
            den[static_cast<std::size_t>(k)] += std::abs(pv * xik) * w;
            rel = std::max(rel, std::abs(pw * xik) /
                                    std::max(den[static_cast<std::size_t>(k)], 1e-300));
            xik *= xi;
        }
        if (jmax < 0) {
            quiet = (rel < 1e-16) ? quiet + 1 : 0;
            if (quiet >= 30) break;
            if (j > 100000)
                throw std::runtime_error("orthogonality_residual: tail did not decay");
        }
    }
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(num[static_cast<std::size_t>(k)]) /
                                    std::max(den[static_cast<std::size_t>(k)], 1e-300));
    return worst;
}

/// Roots of the family polynomial located by the sign-change scan across
/// lattice cells (at most one root per cell), refined by bisection. On the
/// quadratic lattice, `primary` holds the n roots in the lambda variable and
/// `x_roots` their 2n symmetric preimages; elsewhere both are the n x-roots.
struct OracleRoots {
    std::vector<double> primary;
    std::vector<double> x_roots;
};

inline OracleRoots lattice_root_oracle(const FamilySpec& spec) {
    const Regime reg = spec.regime();
    const bool nonstandard_ok =
        spec.family == Family::hahn && spec.alpha < -spec.N && spec.beta < -spec.N &&
        detail::is_natural(spec.N) &&
        (reg == Regime::hahn_row2 || reg == Regime::hahn_row3 || reg == Regime::hahn_row4);
    if (reg != Regime::standard && !nonstandard_ok)
        throw std::domain_error("lattice_root_oracle: no root localisation for this regime");

    auto f = [&](double x) { return hyp_eval(spec, x); };
    const int n = spec.n;
    const int jmax = detail::support_max(spec) >= 0 ? detail::support_max(spec) : 2000000;

    std::vector<double> xs;
    double fprev = f(0.0);
    double xprev = 0.0;
    for (int j = 1; j <= jmax && static_cast<int>(xs.size()) < n; ++j) {
        const double xj = j;
        // a root essentially at the previous node
        if (std::abs(fprev) <= 1e-11 * std::max(1.0, std::abs(f(xprev + 0.5)))) {
            const double fl = f(xprev - 1e-7), fr = f(xprev + 1e-7);
            if ((fl > 0.0) != (fr > 0.0))
                xs.push_back(detail::bisect_root(f, xprev - 1e-7, xprev + 1e-7, fl, 1e-12));
            else
                xs.push_back(xprev);
            fprev = f(xj);
            xprev = xj;
            continue;
        }
        const double fj = f(xj);
        if (std::abs(fj) > 1e-11 * std::max(1.0, std::abs(f(xj - 0.5)))) {
            if ((fprev > 0.0) != (fj > 0.0))
                xs.push_back(detail::bisect_root(f, xprev, xj, fprev, 1e-12));
        }
        fprev = fj;
        xprev = xj;
    }
    if (static_cast<int>(xs.size()) < n)
        throw std::runtime_error("lattice_root_oracle: found " + std::to_string(xs.size()) +
                                 " of " + std::to_string(n) + " roots for " + spec.label());

    OracleRoots out;
    if (!spec.quadratic()) {
        out.primary = xs;
        out.x_roots = xs;
        return out;
    }
    const Lattice lat = lattice_of(spec);
    for (double r : xs) out.primary.push_back(r * (r + lat.shift));
    const double c2 = 2.0 * spec.center();
    for (std::size_t i = xs.size(); i-- > 0;) out.x_roots.push_back(c2 - xs[i]);
    out.x_roots.insert(out.x_roots.end(), xs.begin(), xs.end());
    return out;
}

/// Fixed-charge picture of the external field: point charges with a size and
/// an exclusion radius plus a constant background force. The paper states
/// these only for Meixner and Hahn; the other fields have no finite
/// representation of this shape.
struct FixedCharge {
    double location;
    double size;
    double radius;
};

struct FieldDecomposition {
    std::vector<FixedCharge> charges;
    double constant_force = 0.0;
};

inline FieldDecomposition field_decomposition(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::meixner: {
            if (!(spec.beta > 0.0))
                throw std::domain_error("field_decomposition: meixner needs beta > 0");
            FieldDecomposition d;
            d.charges.push_back({-0.5 * spec.beta, 0.5 * spec.beta, 0.5 * spec.beta});
            d.constant_force = 0.5 * std::log(spec.c);
            return d;
        }
        case Family::hahn: {
            if (spec.regime() != Regime::standard)
                throw std::domain_error("field_decomposition: hahn decomposition is stated for alpha, beta > -1");
            FieldDecomposition d;
            const double sa = 0.5 * (spec.alpha + 1.0);
            const double sb = 0.5 * (spec.beta + 1.0);
            d.charges.push_back({-sa, sa, sa});
            d.charges.push_back({spec.N + sb, sb, sb});
            return d;
        }
        case Family::charlier:
        case Family::krawtchouk:
            throw std::domain_error(
                "field_decomposition: no finite fixed-charge decomposition is stated for this family");
        default:
            throw std::invalid_argument(
                "field_decomposition: supported for uniform-lattice families only");
    }
}

/// Total force of a decomposition at x: sized charges plus the constant.
inline double decomposition_force(const FieldDecomposition& dec, double x) {
    double s = dec.constant_force;
    for (const FixedCharge& q : dec.charges) {
        const ForceEvaluation fe = pair_force(q.location, x, q.radius);
        if (!fe.defined)
            throw std::domain_error("decomposition_force: x inside an exclusion band");
        s += q.size * fe.value;
    }
    return s;
}

}  // namespace eqs

#endif  // EQS_FAMILIES_HPP
