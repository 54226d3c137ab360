// SPDX-License-Identifier: Apache-2.0
//! \file region_catalog.hpp
//! Sign-definite integration regions for the random triangle in a
//! rectangle, and their evaluation by iterated adaptive quadrature.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtri/rational.hpp"

namespace rtri
{

//! Bound of one integration variable as a function of the outer variables.
using BoundFn = std::function<double(std::span<double const>)>;

enum class Integrand
{
    SignedArea,
    One,
};

struct RegionVar
{
    std::string name;
    BoundFn lower;
    BoundFn upper;
    //! Optional location of a 1/(v - pole) near-singularity lying outside
    //! [lower, upper]; the variable is then integrated in log |v - pole|.
    BoundFn pole{};
};

/*!
 * One sign-definite region of the ordered configuration space.
 *
 * Variables are integrated in the order x1, y1, x2, y2, x3, y3; bound k
 * receives the k already-bound values. For SignedArea regions,
 * sign * s >= 0 almost everywhere inside the region.
 */
struct RegionSpec
{
    std::string name;
    std::array<RegionVar, 6> vars;
    int sign{1};
    Integrand integrand{Integrand::SignedArea};
};

/*!
 * Controls for iterated quadrature.
 *
 * rel_tol is split geometrically over the numeric levels (level k gets
 * rel_tol / 2^(k+1)). With inner_analytic the x3/y3 integrals are done
 * exactly, which requires the y3 bounds to be affine in x3 (true for every
 * catalog region).
 */
struct QuadConfig
{
    double rel_tol{1e-4};
    int max_depth{12};
    bool inner_analytic{true};

    void validate() const;
};

struct RegionResult
{
    std::string name;
    double value{0};
    double est_error{0};
    std::uint64_t evaluations{0};
    //! Some level hit max_depth before meeting its tolerance
    bool budget_exhausted{false};
};

//! Regions I1..I5 (y2 > y1) for the rectangle [0,a] x [0,b].
std::vector<RegionSpec> rectangle_regions(double a, double b);

//! Regions I1..I10 for the square of side a.
std::vector<RegionSpec> square_regions(double a);

//! Unit-integrand regions J1..J5 over the bounds of I1..I5.
std::vector<RegionSpec> normalizer_regions(double a, double b);

//! Unit-integrand regions J1..J10 over the bounds of the square catalog.
std::vector<RegionSpec> square_normalizer_regions(double a);

//! Whether the 6-vector v lies inside the region (closed bounds).
bool region_contains(RegionSpec const& region, std::span<double const, 6> v);

//! Integrate one region. Throws Errc::DegenerateRegion if the outermost
//! interval is empty.
RegionResult nested_quadrature(RegionSpec const& region, QuadConfig const& cfg);

//! Integrate several regions, concurrently if threads != 1 (0 = hardware).
//! Results are in input order and independent of the thread count.
std::vector<RegionResult> integrate_regions(std::span<RegionSpec const> regions,
                                            QuadConfig const& cfg,
                                            unsigned threads = 0);

struct AreaRatio
{
    double value{0};        //!< numerator / denominator
    double numerator{0};    //!< sum of signed region integrals
    double denominator{0};  //!< sum of normalizer volumes
    double est_error{0};    //!< first-order error bound on value
    bool budget_exhausted{false};
};

//! Mean triangle area in [0,a] x [0,b] from the 5-region decomposition.
AreaRatio interior_area_ratio(double a, double b, QuadConfig const& cfg,
                              unsigned threads = 0);

double expected_area_interior(double a, double b, QuadConfig const& cfg,
                              unsigned threads = 0);

//! Mean triangle area in the square of side a from all 10 regions.
AreaRatio square_area_ratio(double a, QuadConfig const& cfg,
                            unsigned threads = 0);

/*!
 * Closed-form constant for a named region integral or aggregate.
 *
 * Names: I1..I10, J1..J10, I15, J15, II, JJ, RESULT. Region integrals scale
 * as a^4 b^4, normalizers as a^3 b^3, RESULT as a b. Throws
 * Errc::UnknownName.
 */
Rational exact_reference(std::string_view name, double a, double b);

}  // namespace rtri
