// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include <doctest.h>

#include "rtri/error.hpp"
#include "rtri/monte_carlo.hpp"

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

Problem const unit_interior = InteriorTriangle{RectDomain(1, 1)};
Problem const frame = FrameTriangle{};
Problem const tetra = CubeTetrahedron{CubeDomain(1)};

bool same_bits(EstimateResult const& a, EstimateResult const& b)
{
    return a.mean == b.mean && a.variance == b.variance
           && a.std_error == b.std_error && a.ci95_low == b.ci95_low
           && a.ci95_high == b.ci95_high && a.n == b.n && a.seed == b.seed
           && a.chunks == b.chunks;
}
}  // namespace

TEST_CASE("generator golden values")
{
    // first SplitMix64 output for state 0
    CHECK(mix64(0) == 0xe220a8397b1dcdafull);
    Rng r(42, 0);
    CHECK(r.next() == 322574185352333729ull);
    CHECK(r.next() == 16476475769444334003ull);
    CHECK(r.next() == 4337415086205634694ull);
    CHECK(Rng(42, 1).next() == 12227301281065483524ull);
    CHECK(Rng(7, 0).uniform() == 0.26951077918227384);

    auto const e = estimate(unit_interior, 1000, 42, 4, 1);
    CHECK(e.mean == 0.074516703698602901);
    CHECK(e.variance == 0.0044475253166864955);
}

TEST_CASE("equal seeds give equal streams")
{
    Rng a(9, 3), b(9, 3), c(9, 4);
    bool differs = false;
    for (int i = 0; i < 100; ++i)
    {
        auto const x = a.next();
        CHECK(x == b.next());
        differs = differs || x != c.next();
    }
    CHECK(differs);
}

TEST_CASE("samplers stay on their supports")
{
    Rng rng(1, 0);
    RectDomain const d(2, 3);
    CubeDomain const cube(1.5);
    for (int i = 0; i < 10000; ++i)
    {
        double const u = rng.uniform();
        CHECK((u >= 0 && u < 1));
        CHECK(d.contains(sample_interior(rng, d)));
        Point2 const f = sample_frame(rng);
        bool const on_edge = f.x == 0 || f.x == 1 || f.y == 0 || f.y == 1;
        CHECK(on_edge);
        CHECK((f.x >= 0 && f.x <= 1 && f.y >= 0 && f.y <= 1));
        Point3 const c = sample_cube(rng, cube);
        CHECK((c.x >= 0 && c.x <= 1.5 && c.y >= 0 && c.y <= 1.5 && c.z >= 0
               && c.z <= 1.5));
    }
}

TEST_CASE("sampler moments")
{
    constexpr int n = 1'000'000;
    Rng rng(5, 0);
    RectDomain const d(2, 3);
    RunningMoments x;
    RunningMoments bottom;
    for (int i = 0; i < n; ++i)
    {
        x.push(sample_interior(rng, d).x);
        bottom.push(sample_frame(rng).y == 0 ? 1.0 : 0.0);
    }
    double const x_err = std::sqrt(x.variance() / n);
    CHECK(std::fabs(x.mean - 1.0) < 5 * x_err);
    double const b_err = std::sqrt(bottom.variance() / n);
    CHECK(std::fabs(bottom.mean - 0.25) < 5 * b_err);
}

TEST_CASE("moment merging matches a single pass")
{
    std::vector<double> xs;
    Rng rng(2, 0);
    for (int i = 0; i < 1001; ++i)
        xs.push_back(rng.uniform() * 10 - 3);
    RunningMoments whole, left, right;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        whole.push(xs[i]);
        (i < 377 ? left : right).push(xs[i]);
    }
    left.merge(right);
    CHECK(left.count == whole.count);
    CHECK(left.mean == doctest::Approx(whole.mean).epsilon(1e-13));
    CHECK(left.variance() == doctest::Approx(whole.variance()).epsilon(1e-12));

    RunningMoments empty;
    empty.merge(whole);
    CHECK(empty.mean == whole.mean);
    whole.merge(RunningMoments{});
    CHECK(whole.count == 1001);
}

TEST_CASE("estimates are reproducible across thread counts")
{
    for (Problem const& p : {unit_interior, frame, tetra})
    {
        auto const a = estimate(p, 100'000, 17, 16, 1);
        auto const b = estimate(p, 100'000, 17, 16, 8);
        auto const c = estimate(p, 100'000, 17, 16, 3);
        CHECK(same_bits(a, b));
        CHECK(same_bits(a, c));
        CHECK(a.ci95_low == doctest::Approx(a.mean - z95 * a.std_error));
        CHECK(a.chunks == 16);
        CHECK(a.seed == 17);
    }
}

TEST_CASE("means agree with exact values")
{
    auto const in = estimate(unit_interior, 1'000'000, 42, 64);
    CHECK(std::fabs(in.mean - 11.0 / 144) < 5 * in.std_error);
    auto const fr = estimate(frame, 1'000'000, 42, 64);
    CHECK(std::fabs(fr.mean - 5.0 / 32) < 5 * fr.std_error);
    auto const te = estimate(tetra, 1'000'000, 42, 64);
    CHECK(te.mean > 0.0132);
    CHECK(te.mean < 0.0146);
}

TEST_CASE("standard error shrinks with the square root of n")
{
    for (Problem const& p : {unit_interior, frame, tetra})
    {
        auto const small = estimate(p, 10'000, 3, 8);
        auto const large = estimate(p, 1'000'000, 4, 64);
        double const ratio = small.std_error / large.std_error;
        CHECK(ratio >= 8);
        CHECK(ratio <= 12.5);
    }
}

TEST_CASE("chunking does not bias the estimate")
{
    for (Problem const& p : {unit_interior, frame, tetra})
    {
        auto const one = estimate(p, 400'000, 100, 1);
        auto const many = estimate(p, 400'000, 200, 64);
        double const combined = std::hypot(one.std_error, many.std_error);
        CHECK(std::fabs(one.mean - many.mean) < 5 * combined);
    }
}

TEST_CASE("rectangle estimate scales with area")
{
    auto const unit = estimate(unit_interior, 500'000, 8, 32);
    auto const big
        = estimate(InteriorTriangle{RectDomain(2, 3)}, 500'000, 9, 32);
    double const combined = std::hypot(6 * unit.std_error, big.std_error);
    CHECK(std::fabs(big.mean - 6 * unit.mean) < 5 * combined);
}

TEST_CASE("invalid arguments")
{
    CHECK(code_of([] { estimate(unit_interior, 1, 0, 1); })
          == Errc::InvalidArgument);
    CHECK(code_of([] { estimate(unit_interior, 100, 0, 0); })
          == Errc::InvalidArgument);
    CHECK(code_of([] { estimate(unit_interior, 10, 0, 11); })
          == Errc::InvalidArgument);
}
