#ifndef EQS_POLYNOMIAL_HPP
#define EQS_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqs {

/// Dense univariate polynomial with real coefficients stored in ascending
/// degree order. The zero polynomial has an empty coefficient vector and
/// degree -1; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        trim_exact_zeros();
    }

    Polynomial(std::initializer_list<double> coeffs)
        : Polynomial(std::vector<double>(coeffs)) {}

    static Polynomial constant(double c) { return Polynomial{std::vector<double>{c}}; }

    static Polynomial monomial(int k, double c = 1.0) {
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
        v.back() = c;
        return Polynomial{std::move(v)};
    }

    /// Monic polynomial with the given roots, expanded in the monomial basis.
    static Polynomial from_roots(std::span<const double> roots) {
        Polynomial p = constant(1.0);
        for (double r : roots) p = p * Polynomial{{-r, 1.0}};
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k, zero beyond the degree.
    double coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0.0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    /// Horner evaluation. Returns exactly 0 for the zero polynomial.
    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Sum of |c_i| |x|^i, used to scale residuals so checks are unit-free.
    double eval_scale(double x) const {
        double acc = 0.0;
        const double ax = std::abs(x);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * ax + std::abs(coeffs_[i]);
        return acc;
    }

    double inf_norm() const {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    double one_norm() const {
        double s = 0.0;
        for (double c : coeffs_) s += std::abs(c);
        return s;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * static_cast<double>(i);
        return Polynomial{std::move(d)};
    }

    /// Coefficients of p(x + h) (Taylor shift via binomial expansion).
    Polynomial shifted(double h) const {
        if (coeffs_.empty() || h == 0.0) return *this;
        const std::size_t n = coeffs_.size();
        std::vector<double> out(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            // c_k (x+h)^k contributes c_k * C(k,i) h^(k-i) to x^i
            double term = coeffs_[k];  // i = k: C(k,k) h^0
            out[k] += term;
            for (std::size_t i = k; i-- > 0;) {
                term *= h * static_cast<double>(i + 1) / static_cast<double>(k - i);
                out[i] += term;
            }
        }
        return Polynomial{std::move(out)};
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim_exact_zeros();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim_exact_zeros();
        return *this;
    }

    Polynomial& operator*=(double s) {
        for (double& c : coeffs_) c *= s;
        trim_exact_zeros();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial{std::move(out)};
    }

    bool operator==(const Polynomial&) const = default;

    /// Drops trailing coefficients smaller than rel_eps * max |c_i|.
    Polynomial trimmed(double rel_eps) const {
        const double thr = rel_eps * inf_norm();
        std::vector<double> v = coeffs_;
        while (!v.empty() && std::abs(v.back()) <= thr) v.pop_back();
        return Polynomial{std::move(v)};
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!s.empty()) s += " + ";
            s += std::to_string(coeffs_[i]) + "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim_exact_zeros() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }

    std::vector<double> coeffs_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division: num = quotient * den + remainder, deg(remainder) < deg(den).
inline PolynomialDivision divide(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divide: zero divisor");
    const int dd = den.degree();
    if (num.degree() < dd) return {{}, num};
    std::vector<double> rem = num.coeffs();
    const double lead = den.leading();
    std::vector<double> quo(static_cast<std::size_t>(num.degree() - dd) + 1, 0.0);
    for (int k = num.degree(); k >= dd; --k) {
        const double q = rem[static_cast<std::size_t>(k)] / lead;
        quo[static_cast<std::size_t>(k - dd)] = q;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k - dd + i)] -= q * den.coeff(i);
        rem[static_cast<std::size_t>(k)] = 0.0;  // eliminated by construction
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return {Polynomial{std::move(quo)}, Polynomial{std::move(rem)}};
}

namespace detail {

template <class F>
double bisect_root(F&& f, double lo, double hi, double flo, double tol) {
    // flo carries the sign of f at lo; the bracket is assumed to change sign.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol * std::max(1.0, std::abs(mid))) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// All real roots of p, ascending. Recursion on the derivative isolates the
/// monotone pieces; each sign change is then bisected. Even-multiplicity
/// roots are picked up at the critical points where |p| collapses.
inline std::vector<double> real_roots(const Polynomial& p, double tol = 1e-13) {
    const int deg = p.degree();
    if (deg <= 0) return {};
    if (deg == 1) return {-p.coeff(0) / p.coeff(1)};

    std::vector<double> crit = real_roots(p.derivative(), tol);

    // Cauchy bound: all real roots lie inside [-M, M].
    double m = 0.0;
    for (int i = 0; i < deg; ++i) m = std::max(m, std::abs(p.coeff(i)));
    double bound = 1.0 + m / std::abs(p.leading());
    for (double c : crit) bound = std::max(bound, std::abs(c) + 1.0);

    std::vector<double> grid;
    grid.push_back(-bound);
    for (double c : crit)
        if (c > -bound && c < bound) grid.push_back(c);
    grid.push_back(bound);

    std::vector<double> roots;
    auto push = [&](double r) {
        if (!roots.empty() && std::abs(r - roots.back()) <= 4.0 * tol * std::max(1.0, std::abs(r)))
            return;
        roots.push_back(r);
    };

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double a = grid[i], b = grid[i + 1];
        const double fa = p(a), fb = p(b);
        const double sa = p.eval_scale(a), sb = p.eval_scale(b);
        const bool za = std::abs(fa) <= 1e-12 * std::max(1.0, sa);
        const bool zb = std::abs(fb) <= 1e-12 * std::max(1.0, sb);
        if (za) push(a);
        if (!za && !zb && (fa > 0.0) != (fb > 0.0))
            push(detail::bisect_root(p, a, b, fa, tol));
        if (zb && i + 2 == grid.size()) push(b);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace eqs

#endif  // EQS_POLYNOMIAL_HPP
