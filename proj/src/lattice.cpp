// SPDX-License-Identifier: Apache-2.0
#include "rtri/lattice.hpp"

#include <cstdlib>
#include <string>

#include "rtri/error.hpp"

#include "parallel.hpp"

namespace rtri
{
namespace
{
struct IntPoint
{
    std::int64_t x;
    std::int64_t y;
};

// Lattice coordinates scaled by 2n, so every midpoint is integral.
std::vector<IntPoint> scaled_lattice(int n)
{
    std::int64_t const m = 2 * static_cast<std::int64_t>(n);
    std::vector<IntPoint> pts;
    pts.reserve(4 * static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k)
        pts.push_back({2 * k - 1, 0});
    for (std::int64_t k = 1; k <= n; ++k)
        pts.push_back({m, 2 * k - 1});
    for (std::int64_t k = 1; k <= n; ++k)
        pts.push_back({m - (2 * k - 1), m});
    for (std::int64_t k = 1; k <= n; ++k)
        pts.push_back({0, m - (2 * k - 1)});
    return pts;
}

void require_n(int n)
{
    if (n < 1)
    {
        throw Error(Errc::InvalidArgument,
                    "lattice subdivision must be >= 1, got "
                        + std::to_string(n));
    }
}
}  // namespace

MidpointLattice midpoint_lattice(int n)
{
    require_n(n);
    MidpointLattice lattice;
    lattice.n = n;
    Rational const scale(1, 2 * n);
    for (IntPoint const& p : scaled_lattice(n))
    {
        lattice.points.push_back({Rational(p.x) * scale, Rational(p.y) * scale});
    }
    return lattice;
}

Rational enumerate_mean_area(int n, LatticeOptions const& opts)
{
    require_n(n);
    std::uint64_t const count = 4 * static_cast<std::uint64_t>(n);
    // Compare in a form that cannot overflow for any int n
    if (count > 1'000'000 || count * count * count > opts.work_cap)
    {
        throw Error(Errc::WorkLimitExceeded,
                    "(4n)^3 ordered triples exceed the work cap of "
                        + std::to_string(opts.work_cap));
    }

    auto const pts = scaled_lattice(n);
    std::size_t const first_count
        = opts.mode == EnumMode::Full ? pts.size() : pts.size() / 4;

    // Sum of twice-areas for each p1; |2A| <= 2 (2n)^2 and at most 1e8
    // triples keeps every partial sum far inside 64 bits.
    std::vector<std::int64_t> partial(first_count, 0);
    detail::parallel_for(first_count, opts.threads, [&](std::size_t i) {
        IntPoint const p1 = pts[i];
        std::int64_t sum = 0;
        for (IntPoint const& p2 : pts)
        {
            std::int64_t const ex = p2.x - p1.x;
            std::int64_t const ey = p2.y - p1.y;
            for (IntPoint const& p3 : pts)
            {
                sum += std::llabs(ex * (p3.y - p1.y) - ey * (p3.x - p1.x));
            }
        }
        partial[i] = sum;
    });

    BigInt twice_area_sum = 0;
    for (std::int64_t s : partial)
        twice_area_sum += s;
    if (opts.mode == EnumMode::Symmetric)
        twice_area_sum *= 4;

    // mean = sum(2A) / (2 * (2n)^2 * (4n)^3)
    BigInt const m = 2 * n;
    BigInt const c = count;
    return Rational(twice_area_sum, 2 * m * m * c * c * c);
}

}  // namespace rtri
