// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "rtri/error.hpp"
#include "rtri/frame.hpp"

using namespace rtri;

namespace
{
Errc code_of(auto&& fn)
{
    try
    {
        fn();
    }
    catch (Error const& e)
    {
        return e.code();
    }
    FAIL("expected rtri::Error");
    return Errc::InvalidArgument;
}

void check_point(Point2 p, double x, double y)
{
    CHECK(p.x == doctest::Approx(x));
    CHECK(p.y == doctest::Approx(y));
}
}  // namespace

TEST_CASE("perimeter parametrization")
{
    check_point(frame_point(PerimeterParam(0)), 0, 0);
    check_point(frame_point(PerimeterParam(1.5)), 1, 0.5);
    check_point(frame_point(PerimeterParam(2.25)), 0.75, 1);
    check_point(frame_point(PerimeterParam(3.5)), 0, 0.5);
    check_point(frame_point(PerimeterParam(1)), 1, 0);
    CHECK(code_of([] { PerimeterParam(4); }) == Errc::Domain);
    CHECK(code_of([] { PerimeterParam(-0.1); }) == Errc::Domain);
    CHECK(code_of([] { PerimeterParam(NAN); }) == Errc::NonFinite);
}

TEST_CASE("side cases match closed forms")
{
    QuadConfig const cfg;
    CHECK(side_case_value(Side::Bottom, 0, cfg) == doctest::Approx(0.5));
    CHECK(side_case_value(Side::Right, 1, cfg) == doctest::Approx(0.5));
    CHECK(side_case_value(Side::Left, 0, cfg) == doctest::Approx(0.5));
    for (int c = 1; c <= 4; ++c)
    {
        for (double x1 : {0.0, 0.1, 0.25, 1.0 / 3, 0.5, 0.75, 0.9, 1.0})
        {
            CAPTURE(c);
            CAPTURE(x1);
            Side const s = side_from_case(c);
            CHECK(std::fabs(side_case_value(s, x1, cfg)
                            - side_case_closed_form(s, x1))
                  < 1e-10);
        }
    }
}

TEST_CASE("collinear sub-path vanishes")
{
    QuadConfig const cfg;
    for (double x1 : {0.0, 0.3, 1.0})
        CHECK(side_path_value(Side::Bottom, Side::Bottom, x1, cfg) == 0);
    // p2 = (1, y2), p3 = (x3, 0): |s| = |x3 - x1| y2 / 2, which integrates
    // to (x1^2 + (1 - x1)^2) / 8.
    double const x1 = 0.25;
    double const expected = (x1 * x1 + (1 - x1) * (1 - x1)) / 8;
    CHECK(side_path_value(Side::Right, Side::Bottom, x1, cfg)
          == doctest::Approx(expected));
}

TEST_CASE("frame sum polynomial")
{
    QuadConfig const cfg;
    CHECK(frame_sum_poly(0, cfg) == doctest::Approx(17.0 / 6));
    CHECK(frame_sum_poly(1, cfg) == doctest::Approx(17.0 / 6));
    CHECK(frame_sum_poly(0.5, cfg) == doctest::Approx(7.0 / 3));
    CHECK(frame_sum_poly(0.3, cfg)
          == doctest::Approx(17.0 / 6 - 0.6 + 2 * 0.09));
}

TEST_CASE("mean frame area")
{
    auto const r = expected_area_frame({});
    CHECK(r.value == doctest::Approx(5.0 / 32).epsilon(1e-10));
    CHECK(r.numerator == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(r.est_error < 1e-8);
    for (int c = 2; c <= 4; ++c)
    {
        CAPTURE(c);
        CHECK(expected_area_frame({}, side_from_case(c)).value
              == doctest::Approx(r.value).epsilon(1e-12));
    }
}

TEST_CASE("invalid inputs")
{
    QuadConfig const cfg;
    CHECK(code_of([&] { side_case_value(Side::Top, 1.5, cfg); })
          == Errc::Domain);
    CHECK(code_of([&] { side_case_value(Side::Top, NAN, cfg); })
          == Errc::NonFinite);
    CHECK(code_of([] { side_from_case(0); }) == Errc::InvalidArgument);
    CHECK(code_of([] { side_from_case(5); }) == Errc::InvalidArgument);
    QuadConfig bad;
    bad.max_depth = -1;
    CHECK(code_of([&] { expected_area_frame(bad); }) == Errc::InvalidArgument);
}
