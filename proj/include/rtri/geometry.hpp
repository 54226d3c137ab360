// SPDX-License-Identifier: Apache-2.0
//! \file geometry.hpp
//! Signed triangle area, tetrahedron volume and the host domains.
#pragma once

#include "rtri/rational.hpp"

namespace rtri
{

struct Point2
{
    double x{};
    double y{};
};

struct Point3
{
    double x{};
    double y{};
    double z{};
};

//! Axis-aligned rectangle [0,a] x [0,b]; the square is a == b.
class RectDomain
{
  public:
    RectDomain(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    bool contains(Point2 const& p) const noexcept
    {
        return p.x >= 0 && p.x <= a_ && p.y >= 0 && p.y <= b_;
    }

  private:
    double a_;
    double b_;
};

//! Cube [0,side]^3.
class CubeDomain
{
  public:
    explicit CubeDomain(double side);

    double side() const noexcept { return side_; }

  private:
    double side_;
};

enum class Orientation
{
    CCW,
    CW,
    Collinear,
};

/*!
 * Signed area of the triangle (p1, p2, p3).
 *
 * Positive iff the vertices are in counter-clockwise order. Throws
 * Errc::NonFinite for NaN or infinite coordinates.
 */
double signed_area(Point2 const& p1, Point2 const& p2, Point2 const& p3);

//! Unsigned area; invariant under permutation of the vertices.
double triangle_area(Point2 const& p1, Point2 const& p2, Point2 const& p3);

//! Sign of the computed signed area (no tolerance).
Orientation
orientation(Point2 const& p1, Point2 const& p2, Point2 const& p3);

//! det[p2-p1, p3-p1, p4-p1] / 6
double signed_volume_tetra(Point3 const& p1,
                           Point3 const& p2,
                           Point3 const& p3,
                           Point3 const& p4);

//---------------------------------------------------------------------------//
// Unchecked kernels for hot loops whose inputs are finite by construction.

inline double signed_area_unchecked(double x1, double y1, double x2,
                                    double y2, double x3, double y3) noexcept
{
    return 0.5 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
}

inline double signed_volume_unchecked(Point3 const& p1,
                                      Point3 const& p2,
                                      Point3 const& p3,
                                      Point3 const& p4) noexcept
{
    double const ax = p2.x - p1.x, ay = p2.y - p1.y, az = p2.z - p1.z;
    double const bx = p3.x - p1.x, by = p3.y - p1.y, bz = p3.z - p1.z;
    double const cx = p4.x - p1.x, cy = p4.y - p1.y, cz = p4.z - p1.z;
    return (ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx)
            + az * (bx * cy - by * cx))
           / 6.0;
}

//---------------------------------------------------------------------------//
// Exact counterpart used by the lattice enumeration oracle.

struct RationalPoint2
{
    Rational x;
    Rational y;
};

Rational signed_area(RationalPoint2 const& p1,
                     RationalPoint2 const& p2,
                     RationalPoint2 const& p3);

}  // namespace rtri
