#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "eqs/polynomial.hpp"

using eqs::Polynomial;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("poly_eval basics") {
    const Polynomial p{{-1.0, 0.0, 1.0}};  // x^2 - 1
    REQUIRE(p(2.0) == 3.0);

    const Polynomial zero;
    REQUIRE(zero(7.0) == 0.0);
    REQUIRE(zero.degree() == -1);

    // x (x - beta - N - 1) with beta = 2, N = 10
    const Polynomial hahn_a = Polynomial{{0.0, 1.0}} * Polynomial{{-13.0, 1.0}};
    REQUIRE(hahn_a(1.0) == -12.0);
}

TEST_CASE("eval is additive and accurate at moderate degree") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    std::uniform_real_distribution<double> arg(-100.0, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> ca(7), cb(7);
        for (auto& c : ca) c = coef(rng);
        for (auto& c : cb) c = coef(rng);
        const Polynomial pa{ca}, pb{cb};
        const double x = arg(rng);
        const double lhs = (pa + pb)(x);
        const double rhs = pa(x) + pb(x);
        REQUIRE_THAT(lhs, WithinAbs(rhs, 1e-12 * std::max(1.0, std::abs(rhs))));
    }
}

TEST_CASE("integer-coefficient eval stays within 1e-12 relative up to degree 8") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_real_distribution<double> arg(-100.0, 100.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> c(9);
        for (auto& v : c) v = coef(rng);
        c.back() = c.back() == 0 ? 1 : c.back();
        const Polynomial p{c};
        const double x = arg(rng);
        // reference: summation in long double
        long double ref = 0.0L, xp = 1.0L;
        for (double v : c) {
            ref += static_cast<long double>(v) * xp;
            xp *= static_cast<long double>(x);
        }
        const double r = static_cast<double>(ref);
        REQUIRE_THAT(p(x), WithinAbs(r, 1e-12 * std::max(1.0, std::abs(r))));
    }
}

TEST_CASE("shift and arithmetic") {
    const Polynomial p{{0.0, 0.0, 1.0}};  // x^2
    const Polynomial q = p.shifted(1.0);
    REQUIRE(q.coeff(0) == 1.0);
    REQUIRE(q.coeff(1) == 2.0);
    REQUIRE(q.coeff(2) == 1.0);

    const Polynomial prod = Polynomial{{1.0, 1.0}} * Polynomial{{-1.0, 1.0}};
    REQUIRE(prod == Polynomial{{-1.0, 0.0, 1.0}});

    const auto [quo, rem] = divide(Polynomial{{-1.0, 0.0, 1.0}}, Polynomial{{1.0, 1.0}});
    REQUIRE(quo == Polynomial{{-1.0, 1.0}});
    REQUIRE(rem.is_zero());
}

TEST_CASE("from_roots expands and real_roots recovers") {
    const std::vector<double> roots{-3.5, -0.25, 1.0, 4.0};
    const Polynomial p = Polynomial::from_roots(roots);
    REQUIRE(p.degree() == 4);
    const auto found = eqs::real_roots(p);
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        REQUIRE_THAT(found[i], WithinAbs(roots[i], 1e-10));
}

TEST_CASE("real_roots on random factorable quintics") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> roots(5);
        for (auto& r : roots) r = u(rng);
        std::sort(roots.begin(), roots.end());
        bool separated = true;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            if (roots[i + 1] - roots[i] < 1e-3) separated = false;
        if (!separated) continue;
        const Polynomial p = Polynomial::from_roots(roots);
        const auto found = eqs::real_roots(p);
        REQUIRE(found.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i)
            REQUIRE_THAT(found[i], WithinAbs(roots[i], 1e-8));
    }
}

TEST_CASE("real_roots finds nothing for definite quadratics") {
    REQUIRE(eqs::real_roots(Polynomial{{1.0, 0.0, 1.0}}).empty());
    REQUIRE(eqs::real_roots(Polynomial{{2.0}}).empty());
}
