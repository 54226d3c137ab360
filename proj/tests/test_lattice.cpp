// SPDX-License-Identifier: Apache-2.0
#include <chrono>

#include <doctest.h>

#include "rtri/error.hpp"
#include "rtri/lattice.hpp"

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

// Independent oracle: build the midpoints directly and average |s| over
// every ordered triple in rational arithmetic.
std::vector<RationalPoint2> oracle_points(int n)
{
    std::vector<RationalPoint2> pts;
    for (int side = 0; side < 4; ++side)
    {
        for (int k = 0; k < n; ++k)
        {
            Rational const u(2 * k + 1, 2 * n);
            switch (side)
            {
                case 0: pts.push_back({u, 0}); break;
                case 1: pts.push_back({1, u}); break;
                case 2: pts.push_back({1 - u, 1}); break;
                default: pts.push_back({0, 1 - u}); break;
            }
        }
    }
    return pts;
}

Rational oracle_mean(std::vector<RationalPoint2> const& pts)
{
    Rational sum = 0;
    for (auto const& p : pts)
        for (auto const& q : pts)
            for (auto const& r : pts)
                sum += abs(signed_area(p, q, r));
    std::size_t const m = pts.size();
    return sum / Rational(m * m * m);
}
}  // namespace

TEST_CASE("midpoint lattice points")
{
    auto const one = midpoint_lattice(1);
    REQUIRE(one.points.size() == 4);
    CHECK(one.points[0].x == Rational(1, 2));
    CHECK(one.points[0].y == 0);
    CHECK(one.points[1].x == 1);
    CHECK(one.points[1].y == Rational(1, 2));
    CHECK(one.points[2].x == Rational(1, 2));
    CHECK(one.points[2].y == 1);
    CHECK(one.points[3].x == 0);
    CHECK(one.points[3].y == Rational(1, 2));

    auto const ten = midpoint_lattice(10);
    REQUIRE(ten.points.size() == 40);
    CHECK(ten.points[0].x == Rational(1, 20));
    CHECK(ten.points[0].y == 0);

    auto const two = midpoint_lattice(2);
    REQUIRE(two.points.size() == 8);
    CHECK(two.points[0].x == Rational(1, 4));
    CHECK(two.points[1].x == Rational(3, 4));

    auto const ref = oracle_points(7);
    auto const seven = midpoint_lattice(7);
    for (std::size_t i = 0; i < ref.size(); ++i)
    {
        CHECK(seven.points[i].x == ref[i].x);
        CHECK(seven.points[i].y == ref[i].y);
    }
}

TEST_CASE("small lattices match the brute-force oracle")
{
    CHECK(enumerate_mean_area(1) == Rational(3, 32));
    CHECK(enumerate_mean_area(2) == Rational(9, 64));
    CHECK(enumerate_mean_area(3) == Rational(43, 288));
    for (int n = 1; n <= 4; ++n)
    {
        CAPTURE(n);
        CHECK(enumerate_mean_area(n) == oracle_mean(oracle_points(n)));
    }
}

TEST_CASE("forty-point lattice")
{
    auto const start = std::chrono::steady_clock::now();
    Rational const m = enumerate_mean_area(10);
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    CHECK(m == Rational(249, 1600));
    CHECK(to_string(m) == "249/1600");
    CHECK(secs < 5);
    CHECK(abs(m - Rational(5, 32)) == Rational(1, 1600));
}

TEST_CASE("refinement approaches the continuous mean")
{
    Rational const target(5, 32);
    CHECK(abs(enumerate_mean_area(40) - target)
          < abs(enumerate_mean_area(10) - target));
}

TEST_CASE("symmetric mode and thread count do not change the result")
{
    for (int n : {1, 3, 10})
    {
        CAPTURE(n);
        LatticeOptions sym;
        sym.mode = EnumMode::Symmetric;
        LatticeOptions single;
        single.threads = 1;
        Rational const full = enumerate_mean_area(n);
        CHECK(enumerate_mean_area(n, sym) == full);
        CHECK(enumerate_mean_area(n, single) == full);
    }
}

TEST_CASE("rotating the lattice leaves the mean unchanged")
{
    for (int n : {2, 3})
    {
        auto pts = oracle_points(n);
        for (auto& p : pts)
            p = RationalPoint2{1 - p.y, p.x};
        CHECK(oracle_mean(pts) == enumerate_mean_area(n));
    }
}

TEST_CASE("invalid requests")
{
    CHECK(code_of([] { enumerate_mean_area(0); }) == Errc::InvalidArgument);
    CHECK(code_of([] { midpoint_lattice(-1); }) == Errc::InvalidArgument);
    LatticeOptions capped;
    capped.work_cap = 1000;
    CHECK(code_of([&] { enumerate_mean_area(3, capped); })
          == Errc::WorkLimitExceeded);
    CHECK(code_of([] { enumerate_mean_area(200); })
          == Errc::WorkLimitExceeded);
}
