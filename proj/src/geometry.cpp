// SPDX-License-Identifier: Apache-2.0
#include "rtri/geometry.hpp"

#include <cmath>

#include "rtri/error.hpp"

namespace rtri
{
namespace
{
void require_finite(Point2 const& p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
    {
        throw Error(Errc::NonFinite, "non-finite point coordinate");
    }
}

void require_finite(Point3 const& p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    {
        throw Error(Errc::NonFinite, "non-finite point coordinate");
    }
}
}  // namespace

RectDomain::RectDomain(double a, double b) : a_(a), b_(b)
{
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
    {
        throw Error(Errc::Domain, "rectangle sides must be finite and > 0");
    }
}

CubeDomain::CubeDomain(double side) : side_(side)
{
    if (!(side > 0) || !std::isfinite(side))
    {
        throw Error(Errc::Domain, "cube side must be finite and > 0");
    }
}

double signed_area(Point2 const& p1, Point2 const& p2, Point2 const& p3)
{
    require_finite(p1);
    require_finite(p2);
    require_finite(p3);
    return signed_area_unchecked(p1.x, p1.y, p2.x, p2.y, p3.x, p3.y);
}

double triangle_area(Point2 const& p1, Point2 const& p2, Point2 const& p3)
{
    return std::fabs(signed_area(p1, p2, p3));
}

Orientation
orientation(Point2 const& p1, Point2 const& p2, Point2 const& p3)
{
    double const s = signed_area(p1, p2, p3);
    if (s > 0)
        return Orientation::CCW;
    if (s < 0)
        return Orientation::CW;
    return Orientation::Collinear;
}

double signed_volume_tetra(Point3 const& p1,
                           Point3 const& p2,
                           Point3 const& p3,
                           Point3 const& p4)
{
    require_finite(p1);
    require_finite(p2);
    require_finite(p3);
    require_finite(p4);
    return signed_volume_unchecked(p1, p2, p3, p4);
}

Rational signed_area(RationalPoint2 const& p1,
                     RationalPoint2 const& p2,
                     RationalPoint2 const& p3)
{
    Rational twice = p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y)
                     + p3.x * (p1.y - p2.y);
    return twice / 2;
}

}  // namespace rtri
