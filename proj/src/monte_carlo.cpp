// SPDX-License-Identifier: Apache-2.0
#include "rtri/monte_carlo.hpp"

#include <cmath>
#include <vector>

#include "rtri/error.hpp"

#include "parallel.hpp"

namespace rtri
{

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Rng::Rng(Seed seed, std::uint64_t stream)
    : engine_(mix64(seed ^ mix64(stream + 1)))
{
}

Point2 sample_interior(Rng& rng, RectDomain const& d)
{
    double const x = rng.uniform() * d.a();
    double const y = rng.uniform() * d.b();
    return {x, y};
}

Point2 sample_frame(Rng& rng)
{
    // t = 4u < 4 exactly, since u < 1 and scaling by 4 is exact
    double const t = 4 * rng.uniform();
    double const whole = std::floor(t);
    double const u = t - whole;
    switch (static_cast<int>(whole))
    {
        case 0:
            return {u, 0};
        case 1:
            return {1, u};
        case 2:
            return {1 - u, 1};
        default:
            return {0, 1 - u};
    }
}

Point3 sample_cube(Rng& rng, CubeDomain const& d)
{
    double const x = rng.uniform() * d.side();
    double const y = rng.uniform() * d.side();
    double const z = rng.uniform() * d.side();
    return {x, y, z};
}

double draw(Rng& rng, Problem const& p)
{
    struct Visitor
    {
        Rng& rng;

        double operator()(InteriorTriangle const& t) const
        {
            Point2 const a = sample_interior(rng, t.domain);
            Point2 const b = sample_interior(rng, t.domain);
            Point2 const c = sample_interior(rng, t.domain);
            return std::fabs(signed_area_unchecked(a.x, a.y, b.x, b.y, c.x, c.y));
        }
        double operator()(FrameTriangle const&) const
        {
            Point2 const a = sample_frame(rng);
            Point2 const b = sample_frame(rng);
            Point2 const c = sample_frame(rng);
            return std::fabs(signed_area_unchecked(a.x, a.y, b.x, b.y, c.x, c.y));
        }
        double operator()(CubeTetrahedron const& t) const
        {
            Point3 const a = sample_cube(rng, t.domain);
            Point3 const b = sample_cube(rng, t.domain);
            Point3 const c = sample_cube(rng, t.domain);
            Point3 const d = sample_cube(rng, t.domain);
            return std::fabs(signed_volume_unchecked(a, b, c, d));
        }
    };
    return std::visit(Visitor{rng}, p);
}

void RunningMoments::push(double x) noexcept
{
    ++count;
    double const delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
}

void RunningMoments::merge(RunningMoments const& other) noexcept
{
    if (other.count == 0)
        return;
    if (count == 0)
    {
        *this = other;
        return;
    }
    double const na = static_cast<double>(count);
    double const nb = static_cast<double>(other.count);
    double const n = na + nb;
    double const delta = other.mean - mean;
    mean += delta * nb / n;
    m2 += other.m2 + delta * delta * na * nb / n;
    count += other.count;
}

double RunningMoments::variance() const noexcept
{
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

EstimateResult estimate(Problem const& p,
                        std::uint64_t n,
                        Seed seed,
                        std::uint32_t chunks,
                        unsigned threads)
{
    if (n < 2)
        throw Error(Errc::InvalidArgument, "sample count must be >= 2");
    if (chunks < 1 || chunks > n)
        throw Error(Errc::InvalidArgument, "chunks must lie in [1, n]");

    std::vector<RunningMoments> partial(chunks);
    std::uint64_t const base = n / chunks;
    std::uint64_t const extra = n % chunks;
    detail::parallel_for(chunks, threads, [&](std::size_t i) {
        std::uint64_t const todo = base + (i < extra ? 1 : 0);
        Rng rng(seed, i);
        RunningMoments m;
        for (std::uint64_t k = 0; k < todo; ++k)
            m.push(draw(rng, p));
        partial[i] = m;
    });

    RunningMoments total;
    for (auto const& m : partial)
        total.merge(m);

    EstimateResult r;
    r.mean = total.mean;
    r.variance = total.variance();
    r.std_error = std::sqrt(r.variance / static_cast<double>(n));
    r.ci95_low = r.mean - z95 * r.std_error;
    r.ci95_high = r.mean + z95 * r.std_error;
    r.n = n;
    r.seed = seed;
    r.chunks = chunks;
    return r;
}

}  // namespace rtri
