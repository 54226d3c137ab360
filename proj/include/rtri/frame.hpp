// SPDX-License-Identifier: Apache-2.0
//! \file frame.hpp
//! Mean area of a triangle whose vertices are uniform on the boundary of
//! the unit square.
#pragma once

#include "rtri/geometry.hpp"
#include "rtri/region_catalog.hpp"

namespace rtri
{

//! Arc-length coordinate t in [0, 4) on the unit-square boundary.
class PerimeterParam
{
  public:
    explicit PerimeterParam(double t);

    double t() const noexcept { return t_; }

  private:
    double t_;
};

//! Bottom (t in [0,1)), right, top, left; counter-clockwise from the origin.
enum class Side
{
    Bottom = 1,
    Right = 2,
    Top = 3,
    Left = 4,
};

//! Side from its 1-based case number; throws Errc::InvalidArgument.
Side side_from_case(int case_id);

Point2 frame_point(PerimeterParam t);

//! Point at local parameter u in [0,1] along a side, in perimeter order.
Point2 side_point(Side side, double u);

/*!
 * Double path integral of |s| with p1 = (x1, 0), p2 on `p2_side` and p3
 * over the whole perimeter.
 */
double side_case_value(Side p2_side, double x1, QuadConfig const& cfg);

//! As side_case_value, restricted to p3 on a single side.
double side_path_value(Side p2_side, Side p3_side, double x1,
                       QuadConfig const& cfg);

//! Closed-form polynomial for side_case_value (reference values).
double side_case_closed_form(Side p2_side, double x1);

//! Sum of the four side cases; equals 17/6 - 2 x1 + 2 x1^2.
double frame_sum_poly(double x1, QuadConfig const& cfg);

struct FrameResult
{
    double value{0};      //!< mean area
    double numerator{0};  //!< integral of the side-case sum over x1
    double est_error{0};
};

/*!
 * Mean area of a triangle on the square frame.
 *
 * By symmetry p1 is restricted to one side (bottom by default; any other
 * side rotates the same configuration and must give the same value).
 */
FrameResult expected_area_frame(QuadConfig const& cfg,
                                Side p1_side = Side::Bottom);

}  // namespace rtri
