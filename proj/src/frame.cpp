// SPDX-License-Identifier: Apache-2.0
#include "rtri/frame.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "rtri/error.hpp"
#include "rtri/quadrature.hpp"

namespace rtri
{
namespace
{
struct Segment
{
    Point2 start;
    Point2 dir;
};

constexpr std::array<Side, 4> all_sides
    = {Side::Bottom, Side::Right, Side::Top, Side::Left};

Segment segment(Side side)
{
    switch (side)
    {
        case Side::Bottom:
            return {{0, 0}, {1, 0}};
        case Side::Right:
            return {{1, 0}, {0, 1}};
        case Side::Top:
            return {{1, 1}, {-1, 0}};
        case Side::Left:
            return {{0, 1}, {0, -1}};
    }
    throw Error(Errc::InvalidArgument, "invalid side");
}

Point2 at(Segment const& seg, double u)
{
    return {seg.start.x + u * seg.dir.x, seg.start.y + u * seg.dir.y};
}

double cross(Point2 const& u, Point2 const& v)
{
    return u.x * v.y - u.y * v.x;
}

double area(Point2 const& p1, Point2 const& p2, Point2 const& p3)
{
    return signed_area_unchecked(p1.x, p1.y, p2.x, p2.y, p3.x, p3.y);
}

//! Exact integral of |s| for p3 running over one side.
// s is affine along the side, so |s| has at most one kink.
double abs_area_along(Point2 const& p1, Point2 const& p2, Side p3_side)
{
    Segment const seg = segment(p3_side);
    double const s0 = area(p1, p2, at(seg, 0));
    double const s1 = area(p1, p2, at(seg, 1));
    if ((s0 >= 0) == (s1 >= 0) || s0 == 0 || s1 == 0)
    {
        return 0.5 * std::fabs(s0 + s1);
    }
    return 0.5 * (s0 * s0 + s1 * s1) / std::fabs(s0 - s1);
}

void require_unit(double x1)
{
    if (!std::isfinite(x1))
        throw Error(Errc::NonFinite, "x1 must be finite");
    if (x1 < 0 || x1 > 1)
        throw Error(Errc::Domain, "x1 must lie in [0, 1]");
}

/*!
 * Integral over p2's side of the p3 path integrals selected by mask.
 *
 * The integrand kinks where p1, p2 and a corner of the square are
 * collinear; those parameters split the p2 interval so every piece is
 * smooth.
 */
QuadEstimate p2_integral(Point2 const& p1,
                         Side p2_side,
                         std::array<bool, 4> const& p3_mask,
                         AdaptiveOptions const& opts)
{
    Segment const seg = segment(p2_side);
    std::vector<double> cuts{0.0, 1.0};
    for (Side corner_side : all_sides)
    {
        Point2 const corner = segment(corner_side).start;
        Point2 const to_corner{corner.x - p1.x, corner.y - p1.y};
        Point2 const to_start{seg.start.x - p1.x, seg.start.y - p1.y};
        double const slope = cross(seg.dir, to_corner);
        if (slope == 0)
            continue;
        double const u = -cross(to_start, to_corner) / slope;
        if (u > 0 && u < 1)
            cuts.push_back(u);
    }
    std::sort(cuts.begin(), cuts.end());

    auto integrand = [&](double u) {
        Point2 const p2 = at(seg, u);
        double sum = 0;
        for (std::size_t i = 0; i < all_sides.size(); ++i)
        {
            if (p3_mask[i])
                sum += abs_area_along(p1, p2, all_sides[i]);
        }
        return sum;
    };

    QuadEstimate total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
        QuadEstimate const piece
            = integrate_adaptive(integrand, cuts[i], cuts[i + 1], opts);
        total.value += piece.value;
        total.error += piece.error;
        total.evaluations += piece.evaluations;
        total.converged = total.converged && piece.converged;
    }
    return total;
}

AdaptiveOptions level_options(QuadConfig const& cfg, int level)
{
    AdaptiveOptions opts;
    opts.rel_tol = cfg.rel_tol / std::ldexp(1.0, level + 1);
    opts.abs_tol = 1e-15;
    opts.max_depth = cfg.max_depth;
    return opts;
}

constexpr std::array<bool, 4> whole_perimeter = {true, true, true, true};

}  // namespace

//---------------------------------------------------------------------------//
PerimeterParam::PerimeterParam(double t) : t_(t)
{
    if (!std::isfinite(t))
        throw Error(Errc::NonFinite, "perimeter parameter must be finite");
    if (t < 0 || t >= 4)
        throw Error(Errc::Domain, "perimeter parameter must lie in [0, 4)");
}

Side side_from_case(int case_id)
{
    if (case_id < 1 || case_id > 4)
    {
        throw Error(Errc::InvalidArgument,
                    "side case must be 1..4, got " + std::to_string(case_id));
    }
    return static_cast<Side>(case_id);
}

Point2 side_point(Side side, double u)
{
    return at(segment(side), u);
}

Point2 frame_point(PerimeterParam t)
{
    double const whole = std::floor(t.t());
    return side_point(side_from_case(static_cast<int>(whole) + 1),
                      t.t() - whole);
}

double side_case_value(Side p2_side, double x1, QuadConfig const& cfg)
{
    cfg.validate();
    require_unit(x1);
    return p2_integral(
               {x1, 0}, p2_side, whole_perimeter, level_options(cfg, 0))
        .value;
}

double side_path_value(Side p2_side, Side p3_side, double x1,
                       QuadConfig const& cfg)
{
    cfg.validate();
    require_unit(x1);
    std::array<bool, 4> mask{};
    mask[static_cast<int>(p3_side) - 1] = true;
    return p2_integral({x1, 0}, p2_side, mask, level_options(cfg, 0)).value;
}

double side_case_closed_form(Side p2_side, double x1)
{
    double const x2 = x1 * x1;
    switch (p2_side)
    {
        case Side::Bottom:
            return 0.5 - x1 + x2;
        case Side::Right:
            return (11 - 8 * x1 + 3 * x2) / 12;
        case Side::Top:
            return (11 - 6 * x1 + 6 * x2) / 12;
        case Side::Left:
            return (6 + 2 * x1 + 3 * x2) / 12;
    }
    throw Error(Errc::InvalidArgument, "invalid side");
}

double frame_sum_poly(double x1, QuadConfig const& cfg)
{
    double sum = 0;
    for (Side side : all_sides)
        sum += side_case_value(side, x1, cfg);
    return sum;
}

FrameResult expected_area_frame(QuadConfig const& cfg, Side p1_side)
{
    cfg.validate();
    AdaptiveOptions const outer = level_options(cfg, 0);
    AdaptiveOptions const inner = level_options(cfg, 1);
    Segment const p1_seg = segment(p1_side);

    QuadEstimate const e = integrate_adaptive(
        [&](double x1) {
            Point2 const p1 = at(p1_seg, x1);
            QuadEstimate sum;
            for (Side p2_side : all_sides)
            {
                QuadEstimate const part
                    = p2_integral(p1, p2_side, whole_perimeter, inner);
                sum.value += part.value;
                sum.error += part.error;
                sum.evaluations += part.evaluations;
            }
            return sum;
        },
        0.0,
        1.0,
        outer);

    // p1 ranges over one side (length 1) while p2 and p3 each range over
    // the full perimeter (length 4): total measure 1 * 4 * 4 = 16.
    constexpr double normalizer = 16;
    FrameResult r;
    r.numerator = e.value;
    r.value = e.value / normalizer;
    r.est_error = e.error / normalizer;
    return r;
}

}  // namespace rtri
