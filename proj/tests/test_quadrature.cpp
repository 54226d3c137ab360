// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "rtri/quadrature.hpp"

using namespace rtri;

TEST_CASE("single panel integrates polynomials up to degree 22")
{
    AdaptiveOptions opts;
    opts.max_depth = 0;
    for (int d = 0; d <= 22; ++d)
    {
        auto const e = integrate_adaptive(
            [d](double x) { return std::pow(x, d); }, 0.0, 2.0, opts);
        double const exact = std::pow(2.0, d + 1) / (d + 1);
        CHECK(e.value == doctest::Approx(exact).epsilon(1e-13));
        CHECK(e.evaluations == 15);
    }
}

TEST_CASE("empty or reversed interval gives zero")
{
    auto const e = integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, {});
    CHECK(e.value == 0);
    CHECK(e.evaluations == 0);
    CHECK(e.converged);
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 1.0, {}).value == 0);
}

TEST_CASE("adaptive refinement handles a kink")
{
    AdaptiveOptions opts;
    opts.rel_tol = 1e-7;
    opts.max_depth = 30;
    auto const e = integrate_adaptive(
        [](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, opts);
    CHECK(e.converged);
    CHECK(e.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-7));
}

TEST_CASE("budget exhaustion is reported")
{
    AdaptiveOptions opts;
    opts.rel_tol = 1e-15;
    opts.max_depth = 2;
    auto const e = integrate_adaptive(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts);
    CHECK_FALSE(e.converged);
    CHECK(e.value == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("nested estimates propagate inner errors")
{
    AdaptiveOptions opts;
    auto const e = integrate_adaptive(
        [&](double x) {
            return integrate_adaptive([x](double y) { return x * y; }, 0.0, 1.0,
                                      opts);
        },
        0.0, 1.0, opts);
    CHECK(e.value == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(e.evaluations == 15 * 15);
}
