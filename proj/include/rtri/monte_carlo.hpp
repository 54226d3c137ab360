// SPDX-License-Identifier: Apache-2.0
//! \file monte_carlo.hpp
//! Seeded, chunk-deterministic Monte-Carlo estimators.
#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "rtri/geometry.hpp"

namespace rtri
{

using Seed = std::uint64_t;

//! SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/*!
 * Per-chunk random stream.
 *
 * A 64-bit Mersenne Twister seeded with mix64(seed ^ mix64(stream + 1));
 * doubles use the top 53 bits. Both the engine and this derivation are
 * frozen: golden tests pin their output.
 */
class Rng
{
  public:
    Rng(Seed seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }
    //! Uniform on [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }

  private:
    std::mt19937_64 engine_;
};

struct InteriorTriangle
{
    RectDomain domain;
};

struct FrameTriangle
{
};

struct CubeTetrahedron
{
    CubeDomain domain;
};

using Problem = std::variant<InteriorTriangle, FrameTriangle, CubeTetrahedron>;

Point2 sample_interior(Rng& rng, RectDomain const& d);

//! Uniform in arc length on the unit-square boundary.
Point2 sample_frame(Rng& rng);

Point3 sample_cube(Rng& rng, CubeDomain const& d);

//! One draw of the problem's random area (or |volume|).
double draw(Rng& rng, Problem const& p);

//! Streaming count / mean / sum of squared deviations.
struct RunningMoments
{
    std::uint64_t count{0};
    double mean{0};
    double m2{0};

    void push(double x) noexcept;
    //! Pairwise combination of two disjoint samples
    void merge(RunningMoments const& other) noexcept;
    double variance() const noexcept;
};

struct EstimateResult
{
    double mean{0};
    double variance{0};  //!< unbiased sample variance
    double std_error{0};
    double ci95_low{0};
    double ci95_high{0};
    std::uint64_t n{0};
    Seed seed{0};
    std::uint32_t chunks{0};
};

inline constexpr double z95 = 1.959964;

/*!
 * Estimate the problem's mean from n samples split into `chunks` streams.
 *
 * Chunk i draws its share of samples from Rng(seed, i); partial moments
 * are merged in chunk order, so the result depends only on
 * (problem, n, seed, chunks), never on the thread count.
 */
EstimateResult estimate(Problem const& p,
                        std::uint64_t n,
                        Seed seed,
                        std::uint32_t chunks,
                        unsigned threads = 0);

}  // namespace rtri
