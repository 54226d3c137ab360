// SPDX-License-Identifier: Apache-2.0
#include "rtri/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "rtri/frame.hpp"
#include "rtri/geometry.hpp"
#include "rtri/lattice.hpp"
#include "rtri/region_catalog.hpp"

namespace rtri
{
namespace
{
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v)
{
    return fmt::format("{:.15g}", v);
}

class Recorder
{
  public:
    explicit Recorder(AcceptanceReport& report) : report_(report) {}

    void relative(int id,
                  std::string name,
                  double actual,
                  double expected,
                  std::string expected_text,
                  double tol,
                  double seconds)
    {
        double const dev = std::fabs(actual - expected) / std::fabs(expected);
        add(id, std::move(name), std::move(expected_text),
            fmt::format("{} (rel. dev. {:.3e})", num(actual), dev),
            fmt::format("rel {:g}", tol), dev <= tol, seconds);
    }

    void absolute(int id,
                  std::string name,
                  double actual,
                  double expected,
                  std::string expected_text,
                  double tol,
                  double seconds)
    {
        double const dev = std::fabs(actual - expected);
        add(id, std::move(name), std::move(expected_text),
            fmt::format("{} (abs. dev. {:.3e})", num(actual), dev),
            fmt::format("abs {:g}", tol), dev <= tol, seconds);
    }

    void add(int id,
             std::string name,
             std::string expected,
             std::string actual,
             std::string tolerance,
             bool pass,
             double seconds)
    {
        report_.entries.push_back(CriterionResult{id,
                                                  std::move(name),
                                                  std::move(expected),
                                                  std::move(actual),
                                                  std::move(tolerance),
                                                  pass,
                                                  seconds});
    }

  private:
    AcceptanceReport& report_;
};

std::map<std::string, RegionResult>
by_name(std::vector<RegionResult> const& results)
{
    std::map<std::string, RegionResult> out;
    for (auto const& r : results)
        out[r.name] = r;
    return out;
}

double ref_value(std::string const& name, double a = 1, double b = 1)
{
    return to_double(exact_reference(name, a, b));
}

std::string ref_text(std::string const& name, double a = 1, double b = 1)
{
    return to_string(exact_reference(name, a, b));
}

//---------------------------------------------------------------------------//
void quadrature_constants(Recorder& rec, AcceptanceOptions const& opts)
{
    constexpr double tol = 2e-4;
    auto const start = Clock::now();
    auto regions = rectangle_regions(1, 1);
    auto norms = normalizer_regions(1, 1);
    regions.insert(regions.end(), norms.begin(), norms.end());
    auto const r = by_name(integrate_regions(regions, QuadConfig{}, opts.threads));
    double const secs = seconds_since(start);

    for (std::string name : {"I1", "I2", "I3", "I4", "I5"})
    {
        rec.relative(1, "quadrature " + name, r.at(name).value, ref_value(name),
                     ref_text(name), tol, secs);
    }
    rec.relative(1, "quadrature J1", r.at("J1").value, ref_value("J1"),
                 ref_text("J1"), tol, secs);
    int const ratios[] = {5, 18, 5, 7};
    for (int k = 0; k < 4; ++k)
    {
        std::string const name = "J" + std::to_string(k + 2);
        rec.relative(1, "ratio " + name + "/J1",
                     r.at(name).value / r.at("J1").value, ratios[k],
                     std::to_string(ratios[k]), tol, secs);
    }
    double i15 = 0;
    double j15 = 0;
    for (int k = 1; k <= 5; ++k)
    {
        i15 += r.at("I" + std::to_string(k)).value;
        j15 += r.at("J" + std::to_string(k)).value;
    }
    rec.relative(1, "sum I15", i15, ref_value("I15"), ref_text("I15"), tol, secs);
    rec.relative(1, "sum J15", j15, ref_value("J15"), ref_text("J15"), tol, secs);
    rec.add(1, "quadrature constants runtime", "< 60 s",
            fmt::format("{:.3f} s", secs), "60 s", secs < 60, secs);
}

void square_decomposition(Recorder& rec, AcceptanceOptions const& opts)
{
    constexpr double tol = 2e-4;
    auto const start = Clock::now();
    auto const signed_results
        = integrate_regions(square_regions(1), QuadConfig{}, opts.threads);
    auto const norm_results = integrate_regions(
        square_normalizer_regions(1), QuadConfig{}, opts.threads);
    double const secs = seconds_since(start);

    double ii = 0;
    double jj = 0;
    for (auto const& r : signed_results)
        ii += r.value;
    for (auto const& r : norm_results)
        jj += r.value;
    rec.relative(2, "square II", ii, ref_value("II"), ref_text("II"), tol, secs);
    rec.relative(2, "square JJ", jj, ref_value("JJ"), ref_text("JJ"), tol, secs);
    rec.relative(2, "square II/JJ", ii / jj, ref_value("RESULT"), ref_text("RESULT"),
                 tol, secs);

    auto const r = by_name(signed_results);
    std::pair<char const*, char const*> const pairs[] = {
        {"I6", "I4"}, {"I7", "I5"}, {"I8", "I1"}, {"I9", "I2"}, {"I10", "I3"}};
    for (auto const& [lhs, rhs] : pairs)
    {
        auto const& a = r.at(lhs);
        auto const& b = r.at(rhs);
        double const diff = std::fabs(a.value - b.value);
        double const bound = 2 * (a.est_error + b.est_error);
        rec.add(2, fmt::format("symmetry {} = {}", lhs, rhs),
                fmt::format("|{0} - {1}| <= 2 (err {0} + err {1})", lhs, rhs),
                fmt::format("|diff| = {:.3e}, bound = {:.3e}", diff, bound),
                "2x combined est_error", diff <= bound, secs);
    }
}

void rectangle_scale(Recorder& rec, AcceptanceOptions const& opts)
{
    auto const start = Clock::now();
    double const v = expected_area_interior(2, 3, QuadConfig{}, opts.threads);
    rec.relative(3, "expected_area_interior(2, 3)", v, ref_value("RESULT", 2, 3),
                 ref_text("RESULT", 2, 3), 2e-4, seconds_since(start));
}

FrameResult frame_polynomials(Recorder& rec)
{
    constexpr double tol = 1e-4;
    QuadConfig const cfg;
    auto start = Clock::now();
    double worst = 0;
    std::string worst_at;
    for (int c = 1; c <= 4; ++c)
    {
        for (double x1 : {0.0, 0.25, 0.5, 0.75, 1.0})
        {
            Side const side = side_from_case(c);
            double const dev = std::fabs(side_case_value(side, x1, cfg)
                                         - side_case_closed_form(side, x1));
            if (dev >= worst)
            {
                worst = dev;
                worst_at = fmt::format("case {} x1={}", c, x1);
            }
        }
    }
    rec.add(4, "side-case polynomials (20 points)", "closed forms",
            fmt::format("max abs. dev. {:.3e} at {}", worst, worst_at),
            fmt::format("abs {:g}", tol), worst <= tol, seconds_since(start));

    start = Clock::now();
    FrameResult const f = expected_area_frame(cfg);
    double const secs = seconds_since(start);
    rec.absolute(4, "integral of I14 over x1", f.numerator, 2.5, "5/2", tol,
                 secs);
    rec.absolute(4, "expected_area_frame", f.value, 5.0 / 32, "5/32", tol,
                 secs);
    return f;
}

void lattice_exactness(Recorder& rec, AcceptanceOptions const& opts)
{
    auto const start = Clock::now();
    LatticeOptions lo;
    lo.threads = opts.threads;
    Rational const mean = enumerate_mean_area(10, lo);
    double const secs = seconds_since(start);
    Rational const expected(249, 1600);
    rec.add(5, "lattice n=10 mean area", to_string(expected),
            to_string(mean), "exact", mean == expected, secs);
    rec.add(5, "lattice n=10 runtime", "< 5 s", fmt::format("{:.3f} s", secs),
            "5 s", secs < 5, secs);
}

void monte_carlo(Recorder& rec, AcceptanceOptions const& opts)
{
    constexpr std::uint32_t chunks = 64;
    struct Case
    {
        char const* name;
        Problem problem;
    };
    Case const cases[] = {
        {"interior", InteriorTriangle{RectDomain(1, 1)}},
        {"frame", FrameTriangle{}},
        {"tetra", CubeTetrahedron{CubeDomain(1)}},
    };
    for (auto const& c : cases)
    {
        auto const start = Clock::now();
        EstimateResult const e
            = estimate(c.problem, opts.mc_samples, opts.seed, chunks,
                       opts.threads);
        double const secs = seconds_since(start);
        std::string const actual = fmt::format(
            "mean {} +- {:.3e} (n={})", num(e.mean), e.std_error, e.n);
        if (std::holds_alternative<CubeTetrahedron>(c.problem))
        {
            rec.add(6, "MC tetra in cube", "[0.0132, 0.0146]", actual,
                    "band", e.mean >= 0.0132 && e.mean <= 0.0146, secs);
        }
        else
        {
            bool const interior
                = std::holds_alternative<InteriorTriangle>(c.problem);
            double const target = interior ? 11.0 / 144 : 5.0 / 32;
            rec.add(6, fmt::format("MC {} covers target", c.name),
                    interior ? "11/144" : "5/32", actual, "5 stderr",
                    std::fabs(e.mean - target) <= 5 * e.std_error, secs);
        }
        rec.add(6, fmt::format("MC {} runtime", c.name), "< 30 s",
                fmt::format("{:.3f} s", secs), "30 s", secs < 30, secs);
    }
}

double ratio_check(Recorder& rec, AcceptanceOptions const& opts,
                   FrameResult const& frame)
{
    auto const start = Clock::now();
    double const interior
        = expected_area_interior(1, 1, QuadConfig{}, opts.threads);
    double const ratio = interior / frame.value;
    rec.relative(7, "interior/frame ratio", ratio, 22.0 / 45, "22/45", 5e-4,
                 seconds_since(start));
    return ratio;
}

bool same_bits(EstimateResult const& a, EstimateResult const& b)
{
    auto eq = [](double x, double y) {
        return std::memcmp(&x, &y, sizeof(double)) == 0;
    };
    return eq(a.mean, b.mean) && eq(a.variance, b.variance)
           && eq(a.std_error, b.std_error) && eq(a.ci95_low, b.ci95_low)
           && eq(a.ci95_high, b.ci95_high) && a.n == b.n && a.seed == b.seed
           && a.chunks == b.chunks;
}

void determinism(Recorder& rec, AcceptanceOptions const& opts)
{
    auto const start = Clock::now();
    unsigned const many = std::max(4u, std::thread::hardware_concurrency());
    Problem const problems[] = {InteriorTriangle{RectDomain(1, 1)},
                                FrameTriangle{},
                                CubeTetrahedron{CubeDomain(1)}};
    bool ok = true;
    for (auto const& p : problems)
    {
        auto const one = estimate(p, 200'000, opts.seed, 16, 1);
        auto const par = estimate(p, 200'000, opts.seed, 16, many);
        ok = ok && same_bits(one, par);
    }
    rec.add(8, "MC bit-identical across thread counts",
            fmt::format("threads 1 == threads {}", many),
            ok ? "identical" : "differs", "bitwise", ok, seconds_since(start));
}

//---------------------------------------------------------------------------//
// Property suites

double unit(Rng& rng, double lo, double hi)
{
    return lo + (hi - lo) * rng.uniform();
}

//! Rounding-error scale of the area formula: sum of |term| magnitudes
double area_condition(Point2 const& p, Point2 const& q, Point2 const& r)
{
    return 0.5
           * (std::fabs(p.x) * (std::fabs(q.y) + std::fabs(r.y))
              + std::fabs(q.x) * (std::fabs(r.y) + std::fabs(p.y))
              + std::fabs(r.x) * (std::fabs(p.y) + std::fabs(q.y)));
}

double ulp_of(double v)
{
    return std::nextafter(std::fabs(v), std::numeric_limits<double>::infinity())
           - std::fabs(v);
}

void geometry_properties(Recorder& rec, AcceptanceOptions const& opts)
{
    auto const start = Clock::now();
    Rng rng(opts.seed, 0x9e0);
    std::uint64_t antisym_fail = 0;
    std::uint64_t translate_fail = 0;
    std::uint64_t scale_fail = 0;
    for (std::uint64_t i = 0; i < opts.property_cases; ++i)
    {
        std::array<Point2, 3> p;
        for (auto& v : p)
            v = {unit(rng, -10, 10), unit(rng, -10, 10)};
        double const s = signed_area(p[0], p[1], p[2]);
        double const cond = area_condition(p[0], p[1], p[2]);

        // Six permutations: three even, three odd
        double const perms[6] = {
            s,
            signed_area(p[1], p[2], p[0]),
            signed_area(p[2], p[0], p[1]),
            -signed_area(p[1], p[0], p[2]),
            -signed_area(p[0], p[2], p[1]),
            -signed_area(p[2], p[1], p[0]),
        };
        double sum = 0;
        for (int k = 0; k < 6; ++k)
        {
            if (std::fabs(perms[k] - s) > 8 * ulp_of(cond))
                ++antisym_fail;
            sum += (k < 3 ? 1 : -1) * perms[k];
        }
        if (std::fabs(sum) > 48 * ulp_of(cond))
            ++antisym_fail;

        Point2 const v{unit(rng, -10, 10), unit(rng, -10, 10)};
        std::array<Point2, 3> q;
        for (int k = 0; k < 3; ++k)
            q[k] = {p[k].x + v.x, p[k].y + v.y};
        double const shifted = signed_area(q[0], q[1], q[2]);
        double const shifted_cond = std::max(cond, area_condition(q[0], q[1], q[2]));
        if (std::fabs(shifted - s) > 8 * ulp_of(shifted_cond))
            ++translate_fail;

        int const e = static_cast<int>(std::floor(unit(rng, -8, 8)));
        double const lambda = std::ldexp(1.0, e);
        double const scaled
            = signed_area(Point2{lambda * p[0].x, lambda * p[0].y},
                          Point2{lambda * p[1].x, lambda * p[1].y},
                          Point2{lambda * p[2].x, lambda * p[2].y});
        if (scaled != lambda * lambda * s)
            ++scale_fail;
    }
    double const secs = seconds_since(start);
    auto const cases = std::to_string(opts.property_cases);
    rec.add(9, "signed_area antisymmetry", "0 failures of " + cases,
            std::to_string(antisym_fail) + " failures", "8 ulp of term scale",
            antisym_fail == 0, secs);
    rec.add(9, "signed_area translation invariance", "0 failures of " + cases,
            std::to_string(translate_fail) + " failures",
            "8 ulp of term scale", translate_fail == 0, secs);
    rec.add(9, "signed_area power-of-two scaling", "0 failures of " + cases,
            std::to_string(scale_fail) + " failures", "exact",
            scale_fail == 0, secs);
}

void region_sign_properties(Recorder& rec, AcceptanceOptions const& opts)
{
    auto const start = Clock::now();
    Rng rng(opts.seed, 0x5197);
    std::uint64_t failures = 0;
    std::uint64_t checked = 0;
    for (auto const& region : square_regions(1))
    {
        std::uint64_t inside = 0;
        while (inside < opts.property_cases)
        {
            std::array<double, 6> v;
            for (auto& c : v)
                c = rng.uniform();
            if (!region_contains(region, v))
                continue;
            ++inside;
            double const s
                = signed_area_unchecked(v[0], v[1], v[2], v[3], v[4], v[5]);
            if (region.sign * s < -1e-12)
                ++failures;
        }
        checked += inside;
    }
    rec.add(9, "region-sign consistency (10 regions)",
            "sign * s >= -1e-12 at " + std::to_string(checked) + " points",
            std::to_string(failures) + " violations", "-1e-12",
            failures == 0, seconds_since(start));
}

}  // namespace

//---------------------------------------------------------------------------//
bool AcceptanceReport::all_pass() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](CriterionResult const& e) { return e.pass; });
}

bool AcceptanceReport::passed(int id) const
{
    bool any = false;
    for (auto const& e : entries)
    {
        if (e.id != id)
            continue;
        any = true;
        if (!e.pass)
            return false;
    }
    return any;
}

AcceptanceReport run_acceptance(AcceptanceOptions const& opts)
{
    AcceptanceReport report;
    Recorder rec(report);
    quadrature_constants(rec, opts);
    square_decomposition(rec, opts);
    rectangle_scale(rec, opts);
    FrameResult const frame = frame_polynomials(rec);
    lattice_exactness(rec, opts);
    monte_carlo(rec, opts);
    report.ratio_22_45 = ratio_check(rec, opts, frame);
    determinism(rec, opts);
    geometry_properties(rec, opts);
    region_sign_properties(rec, opts);
    return report;
}

}  // namespace rtri
