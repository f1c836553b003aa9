#ifndef EQS_CONFIGURATION_HPP
#define EQS_CONFIGURATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eqs/interval.hpp"

namespace eqs {

/// A strictly increasing list of charge positions with exclusion radius h.
/// Valid configurations keep consecutive gaps strictly greater than h.
struct ChargeConfiguration {
    std::vector<double> points;
    double h = 1.0;
};

struct ValidationReport {
    bool pass = true;
    std::string violation;  // empty when pass

    explicit operator bool() const { return pass; }
};

/// Checks ordering, gaps > h, strict interval membership and (when the system
/// prescribes them) per-interval counts. Defects are reported, never thrown.
inline ValidationReport validate_configuration(const ChargeConfiguration& cfg,
                                               const IntervalSystem& sys) {
    if (!(cfg.h > 0.0)) return {false, "h must be positive"};
    const auto& x = cfg.points;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double gap = x[j + 1] - x[j];
        if (!(gap > cfg.h))
            return {false, "gap " + std::to_string(gap) + " <= h between points " +
                               std::to_string(j) + " and " + std::to_string(j + 1)};
    }
    std::vector<int> seen(sys.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto idx = sys.locate(x[j]);
        if (!idx)
            return {false, "point " + std::to_string(x[j]) + " lies outside every interval"};
        ++seen[*idx];
    }
    if (sys.total_count() > 0) {
        for (std::size_t i = 0; i < sys.size(); ++i) {
            if (seen[i] != sys.count(i))
                return {false, "interval " + sys.interval(i).str() + " holds " +
                                   std::to_string(seen[i]) + " charges, expected " +
                                   std::to_string(sys.count(i))};
        }
    }
    return {};
}

}  // namespace eqs

#endif  // EQS_CONFIGURATION_HPP
