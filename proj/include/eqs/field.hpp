#ifndef EQS_FIELD_HPP
#define EQS_FIELD_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "eqs/interval.hpp"
#include "eqs/polynomial.hpp"

namespace eqs {

namespace detail {

/// Finite window of an interval used for sampling: unbounded ends are clipped
/// past every landmark (roots, poles, finite endpoints) so that sign patterns
/// are already stable beyond it.
inline std::pair<double, double> sampling_window(const Interval& iv,
                                                 const std::vector<double>& landmarks) {
    double reach = 10.0;
    for (double v : landmarks)
        if (std::isfinite(v)) reach = std::max(reach, 2.0 * std::abs(v) + 10.0);
    if (std::isfinite(iv.lo)) reach = std::max(reach, 2.0 * std::abs(iv.lo) + 10.0);
    if (std::isfinite(iv.hi)) reach = std::max(reach, 2.0 * std::abs(iv.hi) + 10.0);
    const double lo = std::isfinite(iv.lo) ? iv.lo : std::min(-reach, iv.hi - reach);
    const double hi = std::isfinite(iv.hi) ? iv.hi : std::max(reach, iv.lo + reach);
    return {lo, hi};
}

/// Uniform grid over the window plus probes hugging each landmark.
inline std::vector<double> sample_points(const Interval& iv, const std::vector<double>& landmarks,
                                         int grid_size) {
    auto [lo, hi] = sampling_window(iv, landmarks);
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(grid_size) + 8 * landmarks.size());
    const double step = (hi - lo) / (grid_size + 1);
    for (int i = 1; i <= grid_size; ++i) pts.push_back(lo + step * i);
    for (double r : landmarks) {
        const double s = std::max(1.0, std::abs(r));
        for (double eps : {1e-3, 1e-6, 1e-9}) {
            for (double cand : {r - eps * s, r + eps * s})
                if (iv.contains(cand) && cand > lo && cand < hi) pts.push_back(cand);
        }
    }
    return pts;
}

}  // namespace detail

/// External field specification F(x) = (1/2h) log(1 + B(x)/A(x)) on an
/// interval system. Construction verifies that 1 + B/A stays positive on the
/// domain interiors and that A and B share no real root there. Immutable
/// after construction.
class RationalField {
public:
    RationalField(Polynomial a, Polynomial b, double h, IntervalSystem domain)
        : a_(std::move(a)),
          b_(std::move(b)),
          sum_(a_ + b_),
          h_(h),
          domain_(std::move(domain)),
          a_roots_(real_roots(a_)),
          sum_roots_(real_roots(sum_)) {
        if (!(h_ > 0.0)) throw std::invalid_argument("RationalField: h must be positive");
        if (a_.is_zero()) throw std::invalid_argument("RationalField: A must be nonzero");
        domain_.check_counts(h_);
        validate_positivity();
        validate_coprime_in_domain();
    }

    const Polynomial& A() const { return a_; }
    const Polynomial& B() const { return b_; }
    /// A + B, cached; the field depends only on (A+B)/A.
    const Polynomial& sum() const { return sum_; }
    double h() const { return h_; }
    const IntervalSystem& domain() const { return domain_; }
    const std::vector<double>& a_roots() const { return a_roots_; }
    const std::vector<double>& sum_roots() const { return sum_roots_; }

    /// (A+B)(x) / A(x).
    double ratio(double x) const { return sum_(x) / a_(x); }

    std::vector<double> landmarks() const {
        std::vector<double> v = a_roots_;
        v.insert(v.end(), sum_roots_.begin(), sum_roots_.end());
        return v;
    }

private:
    void validate_positivity() const {
        const auto marks = landmarks();
        for (std::size_t i = 0; i < domain_.size(); ++i) {
            const Interval& iv = domain_.interval(i);
            for (double x : detail::sample_points(iv, marks, 512)) {
                const double av = a_(x), sv = sum_(x);
                // Skip points essentially on a root; the offset probes cover
                // their neighbourhoods.
                if (std::abs(av) <= 1e-12 * a_.eval_scale(x)) continue;
                if (std::abs(sv) <= 1e-12 * sum_.eval_scale(x)) continue;
                if (!(av * sv > 0.0))
                    throw std::invalid_argument("RationalField: 1 + B/A is not positive at x = " +
                                                std::to_string(x) + " in " + iv.str());
            }
        }
    }

    void validate_coprime_in_domain() const {
        for (double r : a_roots_) {
            if (!domain_.locate(r)) continue;
            if (std::abs(b_(r)) <= 1e-9 * std::max(1.0, b_.eval_scale(r)))
                throw std::invalid_argument(
                    "RationalField: A and B share a real root inside the domain at x = " +
                    std::to_string(r));
        }
    }

    Polynomial a_;
    Polynomial b_;
    Polynomial sum_;
    double h_;
    IntervalSystem domain_;
    std::vector<double> a_roots_;
    std::vector<double> sum_roots_;
};

}  // namespace eqs

#endif  // EQS_FIELD_HPP
