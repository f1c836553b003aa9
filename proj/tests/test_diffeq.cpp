#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "eqs/diffeq.hpp"
#include "eqs/families.hpp"

using namespace eqs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("delta and nabla on monomials") {
    REQUIRE(delta(Polynomial{{0.0, 0.0, 1.0}}, 1.0) == Polynomial{{1.0, 2.0}});  // 2x + 1
    REQUIRE(delta(Polynomial{{5.0}}, 1.0).is_zero());
    REQUIRE(delta(Polynomial{{0.0, 0.0, 0.0, 1.0}}, 2.0) == Polynomial{{8.0, 12.0, 6.0}});

    REQUIRE(nabla(Polynomial{{0.0, 0.0, 1.0}}, 1.0) == Polynomial{{-1.0, 2.0}});  // 2x - 1
    REQUIRE(nabla(Polynomial{{0.0, 1.0}}, 0.75) == Polynomial{{0.75}});
}

TEST_CASE("difference operators commute and compose to the symmetric second difference") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> c(7);
        for (auto& v : c) v = u(rng);
        const Polynomial p{c};
        const double h = 0.5 + 0.01 * trial;
        const Polynomial dn = delta(nabla(p, h), h);
        const Polynomial nd = nabla(delta(p, h), h);
        REQUIRE(dn.degree() == nd.degree());
        for (int k = 0; k <= dn.degree(); ++k)
            REQUIRE_THAT(dn.coeff(k), WithinAbs(nd.coeff(k), 1e-12 * std::max(1.0, dn.inf_norm())));

        // Delta Nabla p = p(x+h) - 2 p(x) + p(x-h), coefficientwise
        const Polynomial direct = p.shifted(h) - 2.0 * p + p.shifted(-h);
        for (int k = 0; k <= std::max(dn.degree(), direct.degree()); ++k)
            REQUIRE_THAT(dn.coeff(k),
                         WithinAbs(direct.coeff(k), 1e-12 * std::max(1.0, direct.inf_norm())));
    }
}

TEST_CASE("delta drops the degree by exactly one") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int deg = 1; deg <= 8; ++deg) {
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = u(rng);
        if (c.back() == 0.0) c.back() = 1.0;
        const Polynomial p{c};
        REQUIRE(delta(p, 0.3).degree() == deg - 1);
    }
}

TEST_CASE("infer_C recovers the charlier eigenvalue") {
    // monic C_2 for a = 1: x^2 - 3x + 1; A = x, B = 1 - x
    const auto res = infer_C(Polynomial{{0.0, 1.0}}, Polynomial{{1.0, -1.0}},
                             Polynomial{{1.0, -3.0, 1.0}}, 1.0);
    REQUIRE(res.ok);
    REQUIRE(res.C.degree() == 0);
    REQUIRE_THAT(res.C.coeff(0), WithinAbs(2.0, 1e-12));
}

TEST_CASE("infer_C on krawtchouk degree one") {
    const auto spec = FamilySpec::krawtchouk_spec(0.3, 10.0, 1);
    const auto f = field_of(spec);
    const Polynomial p{{-0.3 * 10.0, 1.0}};  // x - pN
    const auto res = infer_C(f.A(), f.B(), p, 1.0);
    REQUIRE(res.ok);
    REQUIRE_THAT(res.C.coeff(0), WithinAbs(1.0, 1e-12));
}

TEST_CASE("infer_C fails cleanly on a perturbed root") {
    const Polynomial good{{1.0, -3.0, 1.0}};
    const double r = 0.5 * (3.0 - std::sqrt(5.0)) + 1e-3;
    const Polynomial bad = Polynomial{{-r, 1.0}} * Polynomial{{-(0.5 * (3.0 + std::sqrt(5.0))), 1.0}};
    const auto res = infer_C(Polynomial{{0.0, 1.0}}, Polynomial{{1.0, -1.0}}, bad, 1.0);
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.remainder_norm > 1e-5);
    // sanity: the unperturbed polynomial divides
    REQUIRE(infer_C(Polynomial{{0.0, 1.0}}, Polynomial{{1.0, -1.0}}, good, 1.0).ok);
}

TEST_CASE("verify_critical on closed-form charlier roots") {
    const auto f = field_of(FamilySpec::charlier_spec(1.0, 2));
    const ChargeConfiguration exact{{0.5 * (3.0 - std::sqrt(5.0)), 0.5 * (3.0 + std::sqrt(5.0))},
                                    1.0};
    const auto res = verify_critical(exact, f);
    REQUIRE(res.max_residual < 1e-12);
    REQUIRE(res.max_force_residual < 1e-12);

    // equally spaced points are nowhere near critical
    const ChargeConfiguration uniform{{1.0, 2.5, 4.0}, 1.0};
    const auto f3 = field_of(FamilySpec::charlier_spec(1.0, 3));
    REQUIRE(verify_critical(uniform, f3).max_residual > 1e-3);
}

TEST_CASE("leading coefficient identity") {
    const auto charlier = field_of(FamilySpec::charlier_spec(2.0, 1));
    REQUIRE(leading_coefficient_identity(charlier.A(), charlier.B(), 3, 1.0) == 3.0);
    REQUIRE(leading_coefficient_identity(charlier.A(), charlier.B(), 0, 1.0) == 0.0);

    const auto kraw = field_of(FamilySpec::krawtchouk_spec(0.4, 9.0, 1));
    REQUIRE_THAT(leading_coefficient_identity(kraw.A(), kraw.B(), 4, 1.0), WithinAbs(4.0, 1e-14));

    // Meixner's B has slope c - 1, so the constant is n (1 - c), not n.
    const double c = 0.5;
    const auto meix = field_of(FamilySpec::meixner_spec(2.0, c, 1));
    REQUIRE_THAT(leading_coefficient_identity(meix.A(), meix.B(), 2, 1.0),
                 WithinAbs(2.0 * (1.0 - c), 1e-14));

    const auto hahn = field_of(FamilySpec::hahn_spec(1.0, 2.0, 10.0, 1));
    REQUIRE_THROWS_AS(leading_coefficient_identity(hahn.A() * Polynomial{{0.0, 1.0}}, hahn.B(), 1, 1.0),
                      std::invalid_argument);
    // deg A = 2 is allowed: -n(n + alpha + beta + 1)
    REQUIRE_THAT(leading_coefficient_identity(hahn.A(), hahn.B(), 2, 1.0),
                 WithinAbs(-2.0 * (2.0 + 1.0 + 2.0 + 1.0), 1e-12));
}

TEST_CASE("residual identity links force and difference-equation forms") {
    // residual_j = G_j |exp(2 h T_j) - 1| where G_j is the gap product and
    // T_j the total force; checked on random perturbed configurations.
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> mag(-1e-3, 1e-3);
    const auto f = field_of(FamilySpec::charlier_spec(2.0, 4));
    const std::vector<double> base{0.8, 2.3, 4.1, 6.6};
    for (int trial = 0; trial < 50; ++trial) {
        ChargeConfiguration cfg;
        cfg.h = 1.0;
        for (double b : base) cfg.points.push_back(b + mag(rng));
        const auto res = verify_critical(cfg, f);
        for (std::size_t j = 0; j < cfg.points.size(); ++j) {
            double gap_product = 1.0;
            for (std::size_t k = 0; k < cfg.points.size(); ++k) {
                if (k == j) continue;
                gap_product *= (cfg.points[j] - cfg.points[k] - 1.0) /
                               (cfg.points[j] - cfg.points[k] + 1.0);
            }
            const double t = total_force(cfg, f, j);
            const double predicted = std::abs(gap_product) * std::abs(std::expm1(2.0 * t));
            REQUIRE_THAT(res.per_point[j], WithinAbs(predicted, 1e-10 * std::max(1.0, predicted)));
        }
    }
}
