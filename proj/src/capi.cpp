// SPDX-License-Identifier: Apache-2.0
#include "rtri/rtri.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "rtri/acceptance.hpp"
#include "rtri/error.hpp"
#include "rtri/frame.hpp"
#include "rtri/geometry.hpp"
#include "rtri/lattice.hpp"
#include "rtri/monte_carlo.hpp"
#include "rtri/region_catalog.hpp"
#include "rtri/version.hpp"

struct rtri_rational
{
    rtri::Rational value;
    std::string text;
};

struct rtri_catalog
{
    std::vector<rtri::RegionSpec> regions;
};

struct rtri_report
{
    rtri::AcceptanceReport report;
};

namespace
{
thread_local std::string last_error;

rtri_status to_status(rtri::Errc code)
{
    using rtri::Errc;
    switch (code)
    {
        case Errc::InvalidArgument:
            return RTRI_E_INVALID_ARGUMENT;
        case Errc::NonFinite:
            return RTRI_E_NON_FINITE;
        case Errc::Domain:
            return RTRI_E_DOMAIN;
        case Errc::DegenerateRegion:
            return RTRI_E_DEGENERATE_REGION;
        case Errc::UnknownName:
            return RTRI_E_UNKNOWN_NAME;
        case Errc::WorkLimitExceeded:
            return RTRI_E_WORK_LIMIT;
    }
    return RTRI_E_INTERNAL;
}

template<class F>
rtri_status guarded(F&& f) noexcept
{
    try
    {
        last_error.clear();
        f();
        return RTRI_OK;
    }
    catch (rtri::Error const& e)
    {
        last_error = e.what();
        return to_status(e.code());
    }
    catch (std::bad_alloc const&)
    {
        last_error = "out of memory";
        return RTRI_E_INTERNAL;
    }
    catch (std::exception const& e)
    {
        last_error = e.what();
        return RTRI_E_INTERNAL;
    }
    catch (...)
    {
        last_error = "unknown error";
        return RTRI_E_INTERNAL;
    }
}

void require(bool cond, char const* what)
{
    if (!cond)
        throw rtri::Error(rtri::Errc::InvalidArgument, what);
}

rtri::QuadConfig to_config(rtri_quad_config const* cfg)
{
    rtri::QuadConfig out;
    if (cfg)
    {
        out.rel_tol = cfg->rel_tol;
        out.max_depth = cfg->max_depth;
        out.inner_analytic = cfg->inner_analytic != 0;
    }
    out.validate();
    return out;
}

rtri::Point2 to_cpp(rtri_point2 p)
{
    return {p.x, p.y};
}

rtri::Point3 to_cpp(rtri_point3 p)
{
    return {p.x, p.y, p.z};
}

rtri_rational* make_rational(rtri::Rational value)
{
    auto* r = new rtri_rational{std::move(value), {}};
    r->text = rtri::to_string(r->value);
    return r;
}

rtri_region_result to_c(rtri::RegionResult const& r)
{
    return {r.value, r.est_error, r.evaluations, r.budget_exhausted ? 1 : 0};
}

rtri_area_ratio to_c(rtri::AreaRatio const& r)
{
    return {r.value, r.numerator, r.denominator, r.est_error,
            r.budget_exhausted ? 1 : 0};
}
}  // namespace

extern "C" {

const char* rtri_version(void)
{
    return rtri::version_string;
}

const char* rtri_last_error(void)
{
    return last_error.c_str();
}

const char* rtri_status_name(rtri_status status)
{
    switch (status)
    {
        case RTRI_OK:
            return "ok";
        case RTRI_E_INVALID_ARGUMENT:
            return "invalid argument";
        case RTRI_E_NON_FINITE:
            return "non-finite input";
        case RTRI_E_DOMAIN:
            return "domain error";
        case RTRI_E_DEGENERATE_REGION:
            return "degenerate region";
        case RTRI_E_UNKNOWN_NAME:
            return "unknown name";
        case RTRI_E_WORK_LIMIT:
            return "work limit exceeded";
        case RTRI_E_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

//---------------------------------------------------------------------------//
rtri_status rtri_signed_area(rtri_point2 p1, rtri_point2 p2, rtri_point2 p3,
                             double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::signed_area(to_cpp(p1), to_cpp(p2), to_cpp(p3));
    });
}

rtri_status rtri_triangle_area(rtri_point2 p1, rtri_point2 p2,
                               rtri_point2 p3, double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::triangle_area(to_cpp(p1), to_cpp(p2), to_cpp(p3));
    });
}

rtri_status rtri_orientation_of(rtri_point2 p1, rtri_point2 p2,
                                rtri_point2 p3, rtri_orientation* out)
{
    return guarded([&] {
        require(out, "null output");
        switch (rtri::orientation(to_cpp(p1), to_cpp(p2), to_cpp(p3)))
        {
            case rtri::Orientation::CCW:
                *out = RTRI_CCW;
                break;
            case rtri::Orientation::CW:
                *out = RTRI_CW;
                break;
            case rtri::Orientation::Collinear:
                *out = RTRI_COLLINEAR;
                break;
        }
    });
}

rtri_status rtri_signed_volume_tetra(rtri_point3 p1, rtri_point3 p2,
                                     rtri_point3 p3, rtri_point3 p4,
                                     double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::signed_volume_tetra(
            to_cpp(p1), to_cpp(p2), to_cpp(p3), to_cpp(p4));
    });
}

//---------------------------------------------------------------------------//
void rtri_rational_destroy(rtri_rational* r)
{
    delete r;
}

const char* rtri_rational_str(const rtri_rational* r)
{
    return r ? r->text.c_str() : "";
}

double rtri_rational_to_double(const rtri_rational* r)
{
    return r ? rtri::to_double(r->value) : 0.0;
}

int rtri_rational_equal(const rtri_rational* a, const rtri_rational* b)
{
    return a && b && a->value == b->value ? 1 : 0;
}

//---------------------------------------------------------------------------//
rtri_quad_config rtri_quad_config_default(void)
{
    rtri::QuadConfig const d;
    return {d.rel_tol, d.max_depth, d.inner_analytic ? 1 : 0};
}

rtri_status rtri_catalog_create(rtri_catalog_kind kind, double a, double b,
                                rtri_catalog** out)
{
    return guarded([&] {
        require(out, "null output");
        bool const square = kind == RTRI_CATALOG_SQUARE
                            || kind == RTRI_CATALOG_SQUARE_NORMALIZER;
        if (square && a != b)
        {
            throw rtri::Error(rtri::Errc::Domain,
                              "square catalogs require a == b");
        }
        auto catalog = std::make_unique<rtri_catalog>();
        switch (kind)
        {
            case RTRI_CATALOG_RECTANGLE:
                catalog->regions = rtri::rectangle_regions(a, b);
                break;
            case RTRI_CATALOG_SQUARE:
                catalog->regions = rtri::square_regions(a);
                break;
            case RTRI_CATALOG_NORMALIZER:
                catalog->regions = rtri::normalizer_regions(a, b);
                break;
            case RTRI_CATALOG_SQUARE_NORMALIZER:
                catalog->regions = rtri::square_normalizer_regions(a);
                break;
            default:
                throw rtri::Error(rtri::Errc::InvalidArgument,
                                  "unknown catalog kind");
        }
        *out = catalog.release();
    });
}

void rtri_catalog_destroy(rtri_catalog* catalog)
{
    delete catalog;
}

size_t rtri_catalog_size(const rtri_catalog* catalog)
{
    return catalog ? catalog->regions.size() : 0;
}

const char* rtri_catalog_name(const rtri_catalog* catalog, size_t index)
{
    if (!catalog || index >= catalog->regions.size())
        return "";
    return catalog->regions[index].name.c_str();
}

int rtri_catalog_sign(const rtri_catalog* catalog, size_t index)
{
    if (!catalog || index >= catalog->regions.size())
        return 0;
    return catalog->regions[index].sign;
}

int rtri_catalog_contains(const rtri_catalog* catalog, size_t index,
                          const double point[6])
{
    if (!catalog || !point || index >= catalog->regions.size())
        return 0;
    return rtri::region_contains(catalog->regions[index],
                                 std::span<double const, 6>(point, 6))
               ? 1
               : 0;
}

rtri_status rtri_catalog_integrate(const rtri_catalog* catalog, size_t index,
                                   const rtri_quad_config* cfg,
                                   rtri_region_result* out)
{
    return guarded([&] {
        require(catalog && out, "null argument");
        require(index < catalog->regions.size(), "region index out of range");
        *out = to_c(
            rtri::nested_quadrature(catalog->regions[index], to_config(cfg)));
    });
}

rtri_status rtri_catalog_integrate_all(const rtri_catalog* catalog,
                                       const rtri_quad_config* cfg,
                                       unsigned threads,
                                       rtri_region_result* out)
{
    return guarded([&] {
        require(catalog && out, "null argument");
        auto const results = rtri::integrate_regions(
            catalog->regions, to_config(cfg), threads);
        for (std::size_t i = 0; i < results.size(); ++i)
            out[i] = to_c(results[i]);
    });
}

rtri_status rtri_expected_area_interior(double a, double b,
                                        const rtri_quad_config* cfg,
                                        unsigned threads, rtri_area_ratio* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = to_c(rtri::interior_area_ratio(a, b, to_config(cfg), threads));
    });
}

rtri_status rtri_expected_area_square(double a, const rtri_quad_config* cfg,
                                      unsigned threads, rtri_area_ratio* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = to_c(rtri::square_area_ratio(a, to_config(cfg), threads));
    });
}

rtri_status rtri_exact_reference(const char* name, double a, double b,
                                 rtri_rational** out)
{
    return guarded([&] {
        require(name && out, "null argument");
        *out = make_rational(rtri::exact_reference(name, a, b));
    });
}

//---------------------------------------------------------------------------//
rtri_status rtri_frame_point(double t, rtri_point2* out)
{
    return guarded([&] {
        require(out, "null output");
        auto const p = rtri::frame_point(rtri::PerimeterParam(t));
        *out = {p.x, p.y};
    });
}

rtri_status rtri_frame_side_case(int side_case, double x1,
                                 const rtri_quad_config* cfg, double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::side_case_value(
            rtri::side_from_case(side_case), x1, to_config(cfg));
    });
}

rtri_status rtri_frame_side_case_closed_form(int side_case, double x1,
                                             double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::side_case_closed_form(rtri::side_from_case(side_case), x1);
    });
}

rtri_status rtri_frame_sum(double x1, const rtri_quad_config* cfg,
                           double* out)
{
    return guarded([&] {
        require(out, "null output");
        *out = rtri::frame_sum_poly(x1, to_config(cfg));
    });
}

rtri_status rtri_expected_area_frame(const rtri_quad_config* cfg,
                                     int p1_side, rtri_frame_result* out)
{
    return guarded([&] {
        require(out, "null output");
        auto const r = rtri::expected_area_frame(
            to_config(cfg), rtri::side_from_case(p1_side));
        *out = {r.value, r.numerator, r.est_error};
    });
}

//---------------------------------------------------------------------------//
rtri_status rtri_lattice_point(int n, size_t index, rtri_rational** x,
                               rtri_rational** y)
{
    return guarded([&] {
        require(x && y, "null output");
        auto const lattice = rtri::midpoint_lattice(n);
        require(index < lattice.points.size(), "lattice index out of range");
        auto px = std::unique_ptr<rtri_rational>(
            make_rational(lattice.points[index].x));
        *y = make_rational(lattice.points[index].y);
        *x = px.release();
    });
}

rtri_status rtri_lattice_mean_area(int n, uint64_t work_cap, int symmetric,
                                   unsigned threads, rtri_rational** out)
{
    return guarded([&] {
        require(out, "null output");
        rtri::LatticeOptions opts;
        if (work_cap != 0)
            opts.work_cap = work_cap;
        opts.mode = symmetric ? rtri::EnumMode::Symmetric
                              : rtri::EnumMode::Full;
        opts.threads = threads;
        *out = make_rational(rtri::enumerate_mean_area(n, opts));
    });
}

//---------------------------------------------------------------------------//
rtri_status rtri_mc_estimate(const rtri_mc_problem* problem, uint64_t n,
                             uint64_t seed, uint32_t chunks, unsigned threads,
                             rtri_estimate* out)
{
    return guarded([&] {
        require(problem && out, "null argument");
        rtri::Problem p = rtri::FrameTriangle{};
        switch (problem->kind)
        {
            case RTRI_MC_INTERIOR:
                p = rtri::InteriorTriangle{
                    rtri::RectDomain(problem->a, problem->b)};
                break;
            case RTRI_MC_FRAME:
                break;
            case RTRI_MC_TETRA:
                p = rtri::CubeTetrahedron{rtri::CubeDomain(problem->a)};
                break;
            default:
                throw rtri::Error(rtri::Errc::InvalidArgument,
                                  "unknown problem kind");
        }
        auto const e = rtri::estimate(p, n, seed, chunks, threads);
        *out = {e.mean,      e.variance, e.std_error, e.ci95_low,
                e.ci95_high, e.n,        e.seed,      e.chunks};
    });
}

//---------------------------------------------------------------------------//
rtri_status rtri_acceptance_run(unsigned threads, uint64_t seed,
                                rtri_report** out)
{
    return guarded([&] {
        require(out, "null output");
        rtri::AcceptanceOptions opts;
        opts.threads = threads;
        opts.seed = seed;
        *out = new rtri_report{rtri::run_acceptance(opts)};
    });
}

void rtri_report_destroy(rtri_report* report)
{
    delete report;
}

size_t rtri_report_size(const rtri_report* report)
{
    return report ? report->report.entries.size() : 0;
}

rtri_status rtri_report_entry(const rtri_report* report, size_t index,
                              rtri_criterion* out)
{
    return guarded([&] {
        require(report && out, "null argument");
        require(index < report->report.entries.size(),
                "report index out of range");
        auto const& e = report->report.entries[index];
        *out = {e.id,
                e.criterion.c_str(),
                e.expected.c_str(),
                e.actual.c_str(),
                e.tolerance.c_str(),
                e.pass ? 1 : 0,
                e.seconds};
    });
}

double rtri_report_ratio_22_45(const rtri_report* report)
{
    return report ? report->report.ratio_22_45 : 0.0;
}

int rtri_report_all_pass(const rtri_report* report)
{
    return report && report->report.all_pass() ? 1 : 0;
}

}  // extern "C"
