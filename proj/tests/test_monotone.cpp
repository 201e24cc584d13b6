#include <doctest.h>

#include <cmath>

#include "pdcop/errors.hpp"
#include "pdcop/generator.hpp"
#include "pdcop/monotone.hpp"
#include "support.hpp"

using namespace pdcop;

TEST_CASE("derivatives at lambda = 1 match 1 - sqrt(2t)") {
    const Lambda lambda(1.0);
    for (double t : {1e-4, 0.01, 0.1, 0.3, 0.49}) {
        const auto d = pseudo_inverse_derivatives(lambda, t, 3);
        const double r = std::sqrt(2.0 * t);
        CHECK(d[0] == doctest::Approx(1.0 - r).epsilon(1e-12));
        CHECK(d[1] == doctest::Approx(-1.0 / r).epsilon(1e-10));
        CHECK(d[2] == doctest::Approx(1.0 / (r * r * r)).epsilon(1e-10));
        CHECK(d[3] == doctest::Approx(-3.0 / (r * r * r * r * r)).epsilon(1e-10));
    }
}

TEST_CASE("derivatives agree with central differences") {
    const double h = 1e-5;
    for (double l : {-10.0, -2.0, -1.0, -0.7, 0.0, 0.5, 3.0}) {
        const Lambda lambda(l);
        const double top = lambda.is_strict() ? 5.0 : 0.8 * phi_at_zero(lambda);
        for (double t : test::linspace(0.05 * top, top, 6)) {
            const auto d = pseudo_inverse_derivatives(lambda, t, 4);
            CHECK(d[0] == doctest::Approx(pseudo_inverse(lambda, t)).epsilon(1e-12));
            const auto up = pseudo_inverse_derivatives(lambda, t + h, 3);
            const auto down = pseudo_inverse_derivatives(lambda, t - h, 3);
            const auto up2 = pseudo_inverse_derivatives(lambda, t + 2.0 * h, 3);
            const auto down2 = pseudo_inverse_derivatives(lambda, t - 2.0 * h, 3);
            for (int k = 0; k < 4; ++k) {
                INFO("lambda = " << l << ", t = " << t << ", k = " << k);
                const double fd = (8.0 * (up[k] - down[k]) - (up2[k] - down2[k])) / (12.0 * h);
                CHECK(d[k + 1] == doctest::Approx(fd).epsilon(1e-6).scale(1e-8));
            }
        }
    }
}

TEST_CASE("d-monotone verdicts") {
    CHECK(check_d_monotone(Lambda(-0.7), 3).passed);
    CHECK(check_d_monotone(Lambda(-0.5), 3).passed);
    CHECK(check_d_monotone(Lambda(-1.0), 3).passed);
    CHECK(check_d_monotone(Lambda(-1.0), 5).passed);
    CHECK(check_d_monotone(Lambda(-2.0), 6).passed);
    CHECK(check_d_monotone(Lambda(-3.0), 4).passed);

    const MonotoneReport half = check_d_monotone(Lambda(0.5), 3);
    CHECK_FALSE(half.passed);
    CHECK_FALSE(half.reason.empty());
    const MonotoneReport mild = check_d_monotone(Lambda(-0.3), 3);
    CHECK_FALSE(mild.passed);
    CHECK(mild.at_t > 0.0);
    CHECK_FALSE(check_d_monotone(Lambda(2.0), 3).passed);
    CHECK_FALSE(check_d_monotone(Lambda(-1e-9), 3).passed);
}

TEST_CASE("default grid") {
    for (double l : test::lambda_grid()) {
        const Lambda lambda(l);
        const auto grid = default_monotone_grid(lambda);
        CHECK(grid.size() == 200);
        for (double t : grid) {
            CHECK(t > 0.0);
            if (lambda.is_strict()) CHECK(t <= kStrictGridMax);
            else CHECK(t < phi_at_zero(lambda));
        }
    }
}

TEST_CASE("monotone domain errors") {
    CHECK_THROWS_AS(pseudo_inverse_derivatives(Lambda(1.0), 0.0, 2), DomainError);
    CHECK_THROWS_AS(pseudo_inverse_derivatives(Lambda(1.0), 0.5, 2), DomainError);
    CHECK_THROWS_AS(pseudo_inverse_derivatives(Lambda(1.0), 0.2, -1), DomainError);
    CHECK_THROWS_AS(check_d_monotone(Lambda(1.0), 2), DomainError);
    CHECK_THROWS_AS(check_d_monotone(Lambda(1.0), 3, {0.7}), DomainError);
}
