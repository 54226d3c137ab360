// SPDX-License-Identifier: Apache-2.0
//! \file lattice.hpp
//! Exact mean triangle area over side-midpoint lattices on the unit square.
#pragma once

#include <cstdint>
#include <vector>

#include "rtri/geometry.hpp"
#include "rtri/rational.hpp"

namespace rtri
{

//! Midpoints of an n-fold subdivision of each side of the unit square.
struct MidpointLattice
{
    int n{0};
    //! 4n points, bottom -> right -> top -> left, each side in perimeter
    //! order
    std::vector<RationalPoint2> points;
};

MidpointLattice midpoint_lattice(int n);

enum class EnumMode
{
    //! Every ordered triple (reference)
    Full,
    //! p1 restricted to the bottom side, weighted by 4
    Symmetric,
};

struct LatticeOptions
{
    //! Upper limit on (4n)^3
    std::uint64_t work_cap{100'000'000};
    EnumMode mode{EnumMode::Full};
    unsigned threads{0};
};

/*!
 * Exact mean of the triangle area over all (4n)^3 ordered vertex triples,
 * degenerate triples included.
 *
 * Throws Errc::InvalidArgument for n < 1 and Errc::WorkLimitExceeded if
 * (4n)^3 exceeds the cap.
 */
Rational enumerate_mean_area(int n, LatticeOptions const& opts = {});

}  // namespace rtri
