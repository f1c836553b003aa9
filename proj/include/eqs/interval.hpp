#ifndef EQS_INTERVAL_HPP
#define EQS_INTERVAL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqs {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open interval with optionally infinite endpoints. At most one endpoint may
/// be infinite; the whole real line is not an admissible domain here.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
        if (std::isinf(lo) && std::isinf(hi))
            throw std::invalid_argument("Interval: both endpoints infinite");
        if (std::isnan(lo) || std::isnan(hi))
            throw std::invalid_argument("Interval: NaN endpoint");
    }

    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
    double length() const { return hi - lo; }

    /// Strict membership; coincidence with a finite endpoint within 1e-12
    /// (scaled) counts as outside.
    bool contains(double x) const {
        const double tlo = std::isfinite(lo) ? 1e-12 * std::max(1.0, std::abs(lo)) : 0.0;
        const double thi = std::isfinite(hi) ? 1e-12 * std::max(1.0, std::abs(hi)) : 0.0;
        return x > lo + tlo && x < hi - thi;
    }

    /// Deterministic reference point: midpoint when bounded, otherwise one
    /// unit inside from the finite endpoint.
    double anchor() const {
        if (bounded()) return 0.5 * (lo + hi);
        return std::isfinite(lo) ? lo + 1.0 : hi - 1.0;
    }

    std::string str() const {
        auto fmt = [](double v) {
            if (v == kInf) return std::string("+inf");
            if (v == -kInf) return std::string("-inf");
            return std::to_string(v);
        };
        return "(" + fmt(lo) + ", " + fmt(hi) + ")";
    }
};

/// One or two ordered disjoint open intervals with per-interval charge
/// counts. Counts of zero mean "not yet prescribed".
class IntervalSystem {
public:
    explicit IntervalSystem(Interval only, int count = 0)
        : intervals_{only}, counts_{count} {
        if (count < 0) throw std::invalid_argument("IntervalSystem: negative count");
    }

    IntervalSystem(Interval first, Interval second, int n1 = 0, int n2 = 0)
        : intervals_{first, second}, counts_{n1, n2} {
        if (n1 < 0 || n2 < 0) throw std::invalid_argument("IntervalSystem: negative count");
        if (!(first.hi <= second.lo))
            throw std::invalid_argument("IntervalSystem: intervals must be ordered and disjoint");
    }

    std::size_t size() const { return intervals_.size(); }
    const Interval& interval(std::size_t i) const { return intervals_.at(i); }
    int count(std::size_t i) const { return counts_.at(i); }

    int total_count() const {
        int t = 0;
        for (int c : counts_) t += c;
        return t;
    }

    void set_counts(std::vector<int> counts) {
        if (counts.size() != intervals_.size())
            throw std::invalid_argument("IntervalSystem: counts size mismatch");
        for (int c : counts)
            if (c < 0) throw std::invalid_argument("IntervalSystem: negative count");
        counts_ = std::move(counts);
    }

    /// Index of the interval strictly containing x, if any.
    std::optional<std::size_t> locate(double x) const {
        for (std::size_t i = 0; i < intervals_.size(); ++i)
            if (intervals_[i].contains(x)) return i;
        return std::nullopt;
    }

    /// m <= ceil(L/h) for every bounded interval with a prescribed count.
    void check_counts(double h) const {
        if (!(h > 0.0)) throw std::invalid_argument("IntervalSystem: h must be positive");
        for (std::size_t i = 0; i < intervals_.size(); ++i) {
            const Interval& iv = intervals_[i];
            if (!iv.bounded() || counts_[i] == 0) continue;
            const double cap = std::ceil(iv.length() / h);
            if (static_cast<double>(counts_[i]) > cap)
                throw std::invalid_argument("IntervalSystem: count " + std::to_string(counts_[i]) +
                                            " exceeds capacity " + std::to_string(cap) + " of " +
                                            iv.str());
        }
    }

private:
    std::vector<Interval> intervals_;
    std::vector<int> counts_;
};

}  // namespace eqs

#endif  // EQS_INTERVAL_HPP
