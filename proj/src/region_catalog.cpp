// SPDX-License-Identifier: Apache-2.0
#include "rtri/region_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "rtri/error.hpp"
#include "rtri/geometry.hpp"
#include "rtri/quadrature.hpp"

#include "parallel.hpp"

namespace rtri
{
namespace
{
//---------------------------------------------------------------------------//
// Variable indices into the bound-value vector
enum : std::size_t
{
    X1 = 0,
    Y1,
    X2,
    Y2,
    X3,
    Y3
};

using Vals = std::span<double const>;

double clamp_to(double v, double lo, double hi)
{
    if (!std::isfinite(v))
        return v > 0 ? hi : lo;
    return std::clamp(v, lo, hi);
}

BoundFn constant(double c)
{
    return [c](Vals) { return c; };
}

BoundFn var(std::size_t i)
{
    return [i](Vals v) { return v[i]; };
}

//! Ordinate where the line through p1 and the corner (a, b) passes x2
BoundFn upper_corner_ordinate(double a, double b)
{
    return [a, b](Vals v) {
        double const y = v[Y1] + (b - v[Y1]) * (v[X2] - v[X1]) / (a - v[X1]);
        return clamp_to(y, v[Y1], b);
    };
}

//! Ordinate where the line through p1 and the corner (a, 0) passes x2
BoundFn lower_corner_ordinate(double a)
{
    return [a](Vals v) {
        double const y = v[Y1] - v[Y1] * (v[X2] - v[X1]) / (a - v[X1]);
        return clamp_to(y, 0.0, v[Y1]);
    };
}

//! Ordinate of line (p1, p2) at x3, clamped into [0, b]
BoundFn line_at_x3(double b)
{
    return [b](Vals v) {
        double const y
            = v[Y1] + (v[Y2] - v[Y1]) * (v[X3] - v[X1]) / (v[X2] - v[X1]);
        return std::isnan(y) ? v[Y1] : clamp_to(y, 0.0, b);
    };
}

//! Abscissa where line (p1, p2) meets y = b, clamped into [x2, a]
BoundFn top_crossing(double a, double b)
{
    return [a, b](Vals v) {
        double const x
            = v[X2] + (b - v[Y2]) * (v[X2] - v[X1]) / (v[Y2] - v[Y1]);
        return std::isnan(x) ? a : clamp_to(x, v[X2], a);
    };
}

//! Abscissa where line (p1, p2) meets y = 0, clamped into [x2, a]
BoundFn bottom_crossing(double a)
{
    return [a](Vals v) {
        double const x = v[X2] + v[Y2] * (v[X2] - v[X1]) / (v[Y1] - v[Y2]);
        return std::isnan(x) ? a : clamp_to(x, v[X2], a);
    };
}

RegionSpec make_region(std::string name,
                       int sign,
                       double a,
                       double b,
                       std::pair<BoundFn, BoundFn> y2,
                       std::pair<BoundFn, BoundFn> x3,
                       std::pair<BoundFn, BoundFn> y3,
                       BoundFn y2_pole = {})
{
    RegionSpec r;
    r.name = std::move(name);
    r.sign = sign;
    r.integrand = Integrand::SignedArea;
    r.vars = {
        RegionVar{"x1", constant(0), constant(a)},
        RegionVar{"y1", constant(0), constant(b)},
        RegionVar{"x2", var(X1), constant(a)},
        RegionVar{"y2", std::move(y2.first), std::move(y2.second),
                  std::move(y2_pole)},
        RegionVar{"x3", std::move(x3.first), std::move(x3.second)},
        RegionVar{"y3", std::move(y3.first), std::move(y3.second)},
    };
    return r;
}

void require_domain(double a, double b)
{
    RectDomain{a, b};
}

// Line (p1, p2) rising: either it leaves through the top (I1-I3) or the
// right side (I4, I5).
std::vector<RegionSpec> upper_regions(double a, double b)
{
    auto const y2_top = std::pair{upper_corner_ordinate(a, b), constant(b)};
    auto const y2_right = std::pair{var(Y1), upper_corner_ordinate(a, b)};
    auto const line = line_at_x3(b);
    auto const xtop = top_crossing(a, b);

    std::vector<RegionSpec> out;
    // The crossing abscissa carries 1/(y2 - y1), which is nearly singular
    // at the lower y2 bound when x2 approaches x1.
    out.push_back(make_region("I1", +1, a, b, y2_top, {var(X2), xtop},
                              {line, constant(b)}, var(Y1)));
    out.push_back(make_region("I2", -1, a, b, y2_top, {var(X2), xtop},
                              {constant(0), line}, var(Y1)));
    out.push_back(make_region("I3", -1, a, b, y2_top, {xtop, constant(a)},
                              {constant(0), constant(b)}, var(Y1)));
    out.push_back(make_region("I4", +1, a, b, y2_right,
                              {var(X2), constant(a)}, {line, constant(b)}));
    out.push_back(make_region("I5", -1, a, b, y2_right,
                              {var(X2), constant(a)}, {constant(0), line}));
    return out;
}

// Line (p1, p2) falling: the mirror images (y -> b - y) of I4, I5 and
// I1-I3. Reflection reverses orientation, so each sign flips.
std::vector<RegionSpec> lower_regions(double a, double b)
{
    auto const y2_right = std::pair{lower_corner_ordinate(a), var(Y1)};
    auto const y2_bottom = std::pair{constant(0), lower_corner_ordinate(a)};
    auto const line = line_at_x3(b);
    auto const xbot = bottom_crossing(a);

    std::vector<RegionSpec> out;
    out.push_back(make_region("I6", -1, a, b, y2_right,
                              {var(X2), constant(a)}, {constant(0), line}));
    out.push_back(make_region("I7", +1, a, b, y2_right,
                              {var(X2), constant(a)}, {line, constant(b)}));
    out.push_back(make_region("I8", -1, a, b, y2_bottom, {var(X2), xbot},
                              {constant(0), line}, var(Y1)));
    out.push_back(make_region("I9", +1, a, b, y2_bottom, {var(X2), xbot},
                              {line, constant(b)}, var(Y1)));
    out.push_back(make_region("I10", +1, a, b, y2_bottom,
                              {xbot, constant(a)}, {constant(0), constant(b)},
                              var(Y1)));
    return out;
}

std::vector<RegionSpec> as_normalizers(std::vector<RegionSpec> regions)
{
    for (auto& r : regions)
    {
        r.name.front() = 'J';
        r.sign = +1;
        r.integrand = Integrand::One;
    }
    return regions;
}

//---------------------------------------------------------------------------//
/*!
 * Recursive evaluator for one region.
 *
 * Level k integrates variable k; vals_ holds the values bound so far.
 */
class NestedIntegrator
{
  public:
    NestedIntegrator(RegionSpec const& region, QuadConfig const& cfg)
        : region_(region), cfg_(cfg)
    {
        numeric_levels_ = cfg.inner_analytic ? 4 : 6;
        for (int k = 0; k < numeric_levels_; ++k)
        {
            level_opts_[k].rel_tol = cfg.rel_tol / std::ldexp(1.0, k + 1);
            level_opts_[k].abs_tol = 0;
            level_opts_[k].max_depth = cfg.max_depth;
        }
        lo_seen_.fill(std::numeric_limits<double>::infinity());
        hi_seen_.fill(-std::numeric_limits<double>::infinity());
    }

    /*!
     * Give each inner level an absolute tolerance from a pilot estimate.
     *
     * An inner integral at level k whose error is below
     * r_k * |pilot| / (product of outer variable extents) contributes at
     * most r_k * |pilot| to the total, so tiny inner integrals near
     * degenerate corners need not be resolved to full relative accuracy.
     */
    void calibrate(double pilot_value, NestedIntegrator const& pilot)
    {
        double extent = 1;
        for (int k = 0; k < numeric_levels_; ++k)
        {
            if (k > 0)
            {
                double const width
                    = pilot.hi_seen_[k - 1] - pilot.lo_seen_[k - 1];
                if (width > 0 && std::isfinite(width))
                    extent *= width;
            }
            level_opts_[k].abs_tol = level_opts_[k].rel_tol
                                     * std::fabs(pilot_value) / extent;
        }
    }

    QuadEstimate level(int k)
    {
        if (k == numeric_levels_)
        {
            return cfg_.inner_analytic ? inner_closed_form() : leaf();
        }
        Vals const bound(vals_.data(), static_cast<std::size_t>(k));
        double const lo = region_.vars[k].lower(bound);
        double const hi = region_.vars[k].upper(bound);
        if (hi > lo)
        {
            lo_seen_[k] = std::min(lo_seen_[k], lo);
            hi_seen_[k] = std::max(hi_seen_[k], hi);
        }
        if (region_.vars[k].pole && hi > lo)
        {
            double const pole = region_.vars[k].pole(bound);
            if (pole <= lo || pole >= hi)
            {
                return integrate_graded(k, lo, hi, pole);
            }
        }
        return integrate_adaptive(
            [this, k](double t) {
                vals_[k] = t;
                return level(k + 1);
            },
            lo,
            hi,
            level_opts_[k]);
    }

    // v = pole +- near * (far / near)^t, t in [0, 1]
    QuadEstimate integrate_graded(int k, double lo, double hi, double pole)
    {
        bool const above = pole <= lo;
        double const near = above ? lo - pole : pole - hi;
        double const far = above ? hi - pole : pole - lo;
        if (!(near > 0))
        {
            // Pole on the boundary: the catalog never produces a
            // non-integrable one, so fall back to the plain rule.
            return integrate_adaptive(
                [this, k](double t) {
                    vals_[k] = t;
                    return level(k + 1);
                },
                lo,
                hi,
                level_opts_[k]);
        }
        double const log_ratio = std::log(far / near);
        double const dir = above ? 1.0 : -1.0;
        return integrate_adaptive(
            [this, k, near, log_ratio, pole, dir, lo, hi](double t) {
                double const dist = near * std::exp(t * log_ratio);
                vals_[k] = std::clamp(pole + dir * dist, lo, hi);
                QuadEstimate e = level(k + 1);
                double const jac = dist * log_ratio;
                e.value *= jac;
                e.error *= jac;
                return e;
            },
            0.0,
            1.0,
            level_opts_[k]);
    }

  private:
    RegionSpec const& region_;
    QuadConfig const& cfg_;
    int numeric_levels_{4};
    std::array<AdaptiveOptions, 6> level_opts_{};
    std::array<double, 6> vals_{};
    std::array<double, 6> lo_seen_{};
    std::array<double, 6> hi_seen_{};

    QuadEstimate leaf() const
    {
        double f = 1;
        if (region_.integrand == Integrand::SignedArea)
        {
            f = signed_area_unchecked(vals_[X1], vals_[Y1], vals_[X2],
                                      vals_[Y2], vals_[X3], vals_[Y3]);
        }
        return QuadEstimate{f, 0, 1, true};
    }

    // s is linear in y3 and the y3 bounds are affine in x3, so the y3
    // integral is a quadratic in x3 and 2-point Gauss-Legendre is exact.
    QuadEstimate inner_closed_form()
    {
        Vals const outer(vals_.data(), 4);
        double const lo = region_.vars[X3].lower(outer);
        double const hi = region_.vars[X3].upper(outer);
        if (!(hi > lo))
        {
            return QuadEstimate{0, 0, 1, true};
        }
        double const half = 0.5 * (hi - lo);
        double const mid = 0.5 * (hi + lo);
        double const offset = half / std::sqrt(3.0);

        double const x1 = vals_[X1], y1 = vals_[Y1];
        double const x2 = vals_[X2], y2 = vals_[Y2];
        // 2 s = c0 + cx * x3 + cy * y3
        double const c0 = x1 * y2 - x2 * y1;
        double const cx = y1 - y2;
        double const cy = x2 - x1;

        double sum = 0;
        for (double x3 : {mid - offset, mid + offset})
        {
            vals_[X3] = x3;
            Vals const with_x3(vals_.data(), 5);
            double const ylo = region_.vars[Y3].lower(with_x3);
            double const yhi = region_.vars[Y3].upper(with_x3);
            if (!(yhi > ylo))
                continue;
            double const dy = yhi - ylo;
            if (region_.integrand == Integrand::One)
            {
                sum += dy;
            }
            else
            {
                sum += 0.5 * ((c0 + cx * x3) * dy
                              + 0.5 * cy * (yhi * yhi - ylo * ylo));
            }
        }
        return QuadEstimate{sum * half, 0, 2, true};
    }
};

}  // namespace

//---------------------------------------------------------------------------//
void QuadConfig::validate() const
{
    if (!(rel_tol > 0 && rel_tol < 1))
    {
        throw Error(Errc::InvalidArgument, "rel_tol must lie in (0, 1)");
    }
    if (max_depth < 1)
    {
        throw Error(Errc::InvalidArgument, "max_depth must be >= 1");
    }
}

std::vector<RegionSpec> rectangle_regions(double a, double b)
{
    require_domain(a, b);
    return upper_regions(a, b);
}

std::vector<RegionSpec> square_regions(double a)
{
    require_domain(a, a);
    auto out = upper_regions(a, a);
    auto lower = lower_regions(a, a);
    std::move(lower.begin(), lower.end(), std::back_inserter(out));
    return out;
}

std::vector<RegionSpec> normalizer_regions(double a, double b)
{
    return as_normalizers(rectangle_regions(a, b));
}

std::vector<RegionSpec> square_normalizer_regions(double a)
{
    return as_normalizers(square_regions(a));
}

bool region_contains(RegionSpec const& region, std::span<double const, 6> v)
{
    for (std::size_t k = 0; k < 6; ++k)
    {
        Vals const bound(v.data(), k);
        if (v[k] < region.vars[k].lower(bound)
            || v[k] > region.vars[k].upper(bound))
        {
            return false;
        }
    }
    return true;
}

RegionResult nested_quadrature(RegionSpec const& region, QuadConfig const& cfg)
{
    cfg.validate();
    if (region.sign != 1 && region.sign != -1)
    {
        throw Error(Errc::InvalidArgument,
                    "region " + region.name + " has sign other than +-1");
    }
    double const lo = region.vars[0].lower({});
    double const hi = region.vars[0].upper({});
    if (!(hi > lo))
    {
        throw Error(Errc::DegenerateRegion,
                    "region " + region.name + " has an empty outer interval");
    }

    QuadConfig pilot_cfg = cfg;
    pilot_cfg.rel_tol = std::max(cfg.rel_tol, 1e-2);
    pilot_cfg.max_depth = std::min(cfg.max_depth, 3);
    NestedIntegrator pilot(region, pilot_cfg);
    QuadEstimate const rough = pilot.level(0);

    NestedIntegrator integrator(region, cfg);
    integrator.calibrate(rough.value, pilot);
    QuadEstimate e = integrator.level(0);
    e.evaluations += rough.evaluations;

    RegionResult r;
    r.name = region.name;
    r.value = region.sign * e.value;
    r.est_error = std::fabs(e.error);
    r.evaluations = e.evaluations;
    r.budget_exhausted = !e.converged;
    return r;
}

std::vector<RegionResult> integrate_regions(std::span<RegionSpec const> regions,
                                            QuadConfig const& cfg,
                                            unsigned threads)
{
    cfg.validate();
    std::vector<RegionResult> results(regions.size());
    detail::parallel_for(regions.size(), threads, [&](std::size_t i) {
        results[i] = nested_quadrature(regions[i], cfg);
    });
    return results;
}

namespace
{
AreaRatio ratio_of(std::vector<RegionSpec> const& signed_regions,
                   std::vector<RegionSpec> const& normalizers,
                   QuadConfig const& cfg,
                   unsigned threads)
{
    std::vector<RegionSpec> all = signed_regions;
    all.insert(all.end(), normalizers.begin(), normalizers.end());
    auto const results = integrate_regions(all, cfg, threads);

    AreaRatio out;
    double num_err = 0;
    double den_err = 0;
    for (std::size_t i = 0; i < results.size(); ++i)
    {
        bool const is_num = i < signed_regions.size();
        (is_num ? out.numerator : out.denominator) += results[i].value;
        (is_num ? num_err : den_err) += results[i].est_error;
        out.budget_exhausted = out.budget_exhausted
                               || results[i].budget_exhausted;
    }
    out.value = out.numerator / out.denominator;
    out.est_error = (num_err + std::fabs(out.value) * den_err)
                    / out.denominator;
    return out;
}
}  // namespace

AreaRatio interior_area_ratio(double a, double b, QuadConfig const& cfg,
                              unsigned threads)
{
    return ratio_of(
        rectangle_regions(a, b), normalizer_regions(a, b), cfg, threads);
}

double expected_area_interior(double a, double b, QuadConfig const& cfg,
                              unsigned threads)
{
    return interior_area_ratio(a, b, cfg, threads).value;
}

AreaRatio square_area_ratio(double a, QuadConfig const& cfg, unsigned threads)
{
    return ratio_of(
        square_regions(a), square_normalizer_regions(a), cfg, threads);
}

//---------------------------------------------------------------------------//
Rational exact_reference(std::string_view name, double a, double b)
{
    enum class Scale
    {
        Volume8,  // a^4 b^4
        Volume6,  // a^3 b^3
        Area,     // a b
    };
    struct Entry
    {
        Rational coeff;
        Scale scale;
    };
    // I6..I10 and J6..J10 mirror I4, I5, I1, I2, I3 (and their J's).
    static std::map<std::string, Entry, std::less<>> const table = [] {
        std::map<std::string, Entry, std::less<>> t;
        auto i_region = [](int k) { return Rational(k, 34560); };
        auto j_region = [](int k) { return Rational(k, 432); };
        int const i_mult[] = {1, 23, 140, 19, 37, 19, 37, 1, 23, 140};
        int const j_mult[] = {1, 5, 18, 5, 7, 5, 7, 1, 5, 18};
        for (int k = 0; k < 10; ++k)
        {
            t["I" + std::to_string(k + 1)]
                = Entry{i_region(i_mult[k]), Scale::Volume8};
            t["J" + std::to_string(k + 1)]
                = Entry{j_region(j_mult[k]), Scale::Volume6};
        }
        t["I15"] = Entry{Rational(11, 1728), Scale::Volume8};
        t["J15"] = Entry{Rational(1, 12), Scale::Volume6};
        t["II"] = Entry{Rational(11, 864), Scale::Volume8};
        t["JJ"] = Entry{Rational(1, 6), Scale::Volume6};
        t["RESULT"] = Entry{Rational(11, 144), Scale::Area};
        return t;
    }();

    auto const it = table.find(name);
    if (it == table.end())
    {
        throw Error(Errc::UnknownName,
                    "no reference value named '" + std::string(name) + "'");
    }
    require_domain(a, b);
    Rational const ab = to_rational(a) * to_rational(b);
    switch (it->second.scale)
    {
        case Scale::Volume8:
            return it->second.coeff * ab * ab * ab * ab;
        case Scale::Volume6:
            return it->second.coeff * ab * ab * ab;
        case Scale::Area:
            return it->second.coeff * ab;
    }
    return it->second.coeff;
}

}  // namespace rtri
