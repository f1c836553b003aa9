#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "eqs/electrostatics.hpp"
#include "eqs/families.hpp"

using namespace eqs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

/// Field with B = 0: the external force vanishes identically.
RationalField zero_field(double lo = -10.0, double hi = 10.0) {
    return {Polynomial::constant(1.0), Polynomial{}, 0.5, IntervalSystem(Interval(lo, hi))};
}

}  // namespace

TEST_CASE("pair force calibration against the logarithmic force") {
    const auto f2 = pair_force(0.0, 2.0, 1.0);
    REQUIRE(f2.defined);
    REQUIRE_THAT(f2.value, WithinAbs(0.5 * std::log(3.0), 1e-15));
    REQUIRE_THAT(f2.value / 0.5, WithinAbs(1.0986, 2e-4));  // ~10% above 1/2

    const auto f3 = pair_force(0.0, 3.0, 1.0);
    REQUIRE_THAT(f3.value, WithinAbs(0.5 * std::log(2.0), 1e-15));
    REQUIRE_THAT(f3.value / (1.0 / 3.0), WithinAbs(1.0397, 2e-4));  // ~4% above 1/3

    REQUIRE_FALSE(pair_force(0.0, 0.5, 1.0).defined);
    REQUIRE_FALSE(pair_force(0.0, 1.0, 1.0).defined);
}

TEST_CASE("pair force symmetries") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    std::uniform_real_distribution<double> hs(0.1, 2.0);
    for (int trial = 0; trial < 400; ++trial) {
        const double x = u(rng), y = u(rng), h = hs(rng);
        const auto fwd = pair_force(x, y, h);
        const auto bwd = pair_force(y, x, h);
        REQUIRE(fwd.defined == bwd.defined);
        if (!fwd.defined) continue;
        REQUIRE(fwd.value == -bwd.value);  // exact by construction
    }

    // odd about the source
    for (double s : {1.5, 2.0, 7.25, 80.0}) {
        const double a = pair_force(3.0, 3.0 + s, 1.0).value;
        const double b = pair_force(3.0, 3.0 - s, 1.0).value;
        REQUIRE_THAT(a, WithinAbs(-b, 1e-13 * std::abs(a)));
    }

    // translation invariance
    for (double c : {-1000.0, -3.2, 0.5, 999.0}) {
        const double base = pair_force(0.3, 2.7, 1.0).value;
        const double moved = pair_force(0.3 + c, 2.7 + c, 1.0).value;
        REQUIRE_THAT(moved, WithinAbs(base, 1e-13 * std::max(1.0, std::abs(base))));
    }
}

TEST_CASE("pair force approaches the logarithmic force as h shrinks") {
    const double x = 0.0, y = 2.5;
    double prev = kInf;
    for (double h : {1e-1, 1e-2, 1e-3}) {
        const double err = std::abs(pair_force(x, y, h).value - 1.0 / (y - x));
        REQUIRE(err < prev);
        prev = err;
    }
}

TEST_CASE("pair force decays monotonically and diverges at contact") {
    const double h = 1.0;
    // logarithmic divergence toward the exclusion band, up to double resolution
    const double closest = std::nextafter(1.0, 2.0);
    REQUIRE(pair_force(0.0, closest, h).value > 18.0);
    REQUIRE(pair_force(0.0, closest, h).value > pair_force(0.0, 1.0 + 1e-12, h).value);
    double prev = pair_force(0.0, 1.0 + 1e-12, h).value;
    for (double y : {1.001, 1.01, 1.1, 1.5, 2.0, 5.0, 50.0, 1e4, 1e7}) {
        const double v = pair_force(0.0, y, h).value;
        REQUIRE(v < prev);
        REQUIRE(v > 0.0);
        prev = v;
    }
    REQUIRE(pair_force(0.0, 1e12, h).value < 1e-11);
}

TEST_CASE("series branch matches the log form at the crossover") {
    // just below and above the 1e4 h switch
    const double h = 1.0;
    const double lo = pair_force(0.0, 9999.5, h).value;
    const double hi = pair_force(0.0, 10000.5, h).value;
    const double exact_lo = 0.5 * std::log1p(2.0 / (9999.5 - 1));
    const double exact_hi = 0.5 * std::log1p(2.0 / (10000.5 - 1));
    REQUIRE_THAT(lo, WithinRel(exact_lo, 1e-13));
    REQUIRE_THAT(hi, WithinRel(exact_hi, 1e-13));
}

TEST_CASE("pair potential values") {
    // x = 1, y = -1, h = 0.5
    const double expected = -2.0 * std::log(5.0 / 3.0) - 0.5 * std::log(3.75);
    REQUIRE_THAT(pair_potential(1.0, -1.0, 0.5), WithinAbs(expected, 1e-12));
    REQUIRE_THAT(pair_potential(1.0, -1.0, 0.5), WithinAbs(-1.6825291675231411, 1e-7));

    // even in the separation
    REQUIRE(pair_potential(0.0, 3.0, 1.0) == pair_potential(0.0, -3.0, 1.0));

    // large separation: V ~ -log|y| - 1 (the antiderivative's own constant)
    const double v = pair_potential(0.0, 1e6, 1.0);
    REQUIRE_THAT(v, WithinRel(-std::log(1e6) - 1.0, 1e-5));

    REQUIRE(std::isinf(pair_potential(0.0, 1.0, 1.0)));
    REQUIRE_THROWS_AS(pair_potential(0.0, 0.99, 1.0), std::domain_error);
}

TEST_CASE("external force zeros of the family fields") {
    const auto charlier = field_of(FamilySpec::charlier_spec(2.0, 1));
    REQUIRE(external_force(charlier, 2.0) == 0.0);
    REQUIRE_THAT(external_force(charlier, 1.0), WithinAbs(0.5 * std::log(2.0), 1e-15));

    const auto kraw = field_of(FamilySpec::krawtchouk_spec(0.3, 10.0, 1));
    REQUIRE_THAT(external_force(kraw, 3.0), WithinAbs(0.0, 1e-15));

    const auto meix = field_of(FamilySpec::meixner_spec(2.0, 0.5, 1));
    REQUIRE_THAT(external_force(meix, 2.0), WithinAbs(0.0, 1e-15));

    REQUIRE_THROWS_AS(external_force(charlier, -1.0), std::domain_error);
}

TEST_CASE("external potential quadrature") {
    const auto charlier = field_of(FamilySpec::charlier_spec(2.0, 1));
    REQUIRE(external_potential(charlier, 1.7, 1.7) == 0.0);

    // closed form: -(1/2) int_1^2 log(2/x) dx = (log 2 - 1) / 2
    const double expected = 0.5 * (std::log(2.0) - 1.0);
    REQUIRE_THAT(external_potential(charlier, 1.0, 2.0), WithinAbs(expected, 1e-11));

    // additivity
    const double ab = external_potential(charlier, 0.5, 1.5);
    const double bc = external_potential(charlier, 1.5, 4.0);
    const double ac = external_potential(charlier, 0.5, 4.0);
    REQUIRE_THAT(ac, WithinAbs(ab + bc, 1e-10));

    // integrable endpoint singularity: A vanishes at 0
    const double to_left_end = external_potential(charlier, 1.0, 1e-9);
    REQUIRE(std::isfinite(to_left_end));
}

TEST_CASE("total force single charge") {
    const auto charlier = field_of(FamilySpec::charlier_spec(2.0, 1));
    const ChargeConfiguration at_zero{{2.0}, 1.0};
    REQUIRE(total_force(at_zero, charlier, 0) == 0.0);

    const ChargeConfiguration left{{1.0}, 1.0};
    REQUIRE_THAT(total_force(left, charlier, 0), WithinAbs(0.5 * std::log(2.0), 1e-15));
}

TEST_CASE("mirror points in an even two-interval field receive opposite forces") {
    const auto dh = field_of(FamilySpec::dual_hahn_spec(1.0, 1.0, 8.0, 1));
    const double c = -1.5;
    const ChargeConfiguration cfg{{c - 2.0, c + 2.0}, 1.0};
    const double f0 = total_force(cfg, dh, 0);
    const double f1 = total_force(cfg, dh, 1);
    REQUIRE_THAT(f0, WithinAbs(-f1, 1e-13 * std::max(1.0, std::abs(f1))));
}

TEST_CASE("energy of a two-charge system without an external field") {
    const RationalField none = zero_field();
    const ChargeConfiguration pm{{-1.0, 1.0}, 0.5};
    const double expected = 2.0 * (-2.0 * std::log(5.0 / 3.0) - 0.5 * std::log(3.75));
    REQUIRE_THAT(energy(pm, none), WithinAbs(expected, 1e-11));
    REQUIRE_THAT(energy(pm, none), WithinAbs(-3.3650583350462823, 1e-6));

    // translation invariance of the pure pair energy
    const ChargeConfiguration moved{{2.0, 4.0}, 0.5};
    REQUIRE_THAT(energy(moved, none), WithinAbs(energy(pm, none), 1e-11));
}

TEST_CASE("energy gradient matches central differences") {
    const auto charlier = field_of(FamilySpec::charlier_spec(5.0, 4));
    const ChargeConfiguration cfg{{1.1, 3.0, 5.4, 8.2}, 1.0};
    const auto g = energy_gradient(cfg, charlier);
    const double step = 1e-5;
    for (std::size_t j = 0; j < cfg.points.size(); ++j) {
        ChargeConfiguration plus = cfg, minus = cfg;
        plus.points[j] += step;
        minus.points[j] -= step;
        const double fd = (energy(plus, charlier) - energy(minus, charlier)) / (2.0 * step);
        REQUIRE_THAT(g[j], WithinAbs(fd, 1e-6));
    }

    // n = 1 at the field zero
    const auto charlier2 = field_of(FamilySpec::charlier_spec(2.0, 1));
    const auto g1 = energy_gradient({{2.0}, 1.0}, charlier2);
    REQUIRE(g1[0] == 0.0);
}
