// SPDX-License-Identifier: Apache-2.0
//! Command-line front end over the C interface.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtri/rtri.h"

namespace
{
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum ExitCode : int
{
    exit_ok = 0,
    exit_accuracy = 1,
    exit_usage = 2,
    exit_resource = 3,
};

struct Output
{
    bool table{false};

    void record(json const& j) const
    {
        if (!table)
            std::cout << j.dump() << '\n';
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

//! Map a library failure to an exit code, printing the message.
int fail(rtri_status status)
{
    std::cerr << "error: " << rtri_status_name(status) << ": "
              << rtri_last_error() << '\n';
    switch (status)
    {
        case RTRI_E_WORK_LIMIT:
            return exit_resource;
        case RTRI_E_INTERNAL:
            return exit_accuracy;
        default:
            return exit_usage;
    }
}

struct RationalHandle
{
    rtri_rational* ptr{nullptr};
    ~RationalHandle() { rtri_rational_destroy(ptr); }
};

struct CatalogHandle
{
    rtri_catalog* ptr{nullptr};
    ~CatalogHandle() { rtri_catalog_destroy(ptr); }
};

//---------------------------------------------------------------------------//
struct QuadArgs
{
    double a{1};
    double b{1};
    std::string region{"all"};
    double rel_tol{1e-4};
    int max_depth{12};
    bool numeric_inner{false};
    bool square{false};
    unsigned threads{0};
};

int run_quad(QuadArgs const& args, Output const& out)
{
    auto const start = Clock::now();
    rtri_quad_config cfg = rtri_quad_config_default();
    cfg.rel_tol = args.rel_tol;
    cfg.max_depth = args.max_depth;
    cfg.inner_analytic = args.numeric_inner ? 0 : 1;

    std::vector<rtri_catalog_kind> kinds;
    if (args.square)
        kinds = {RTRI_CATALOG_SQUARE, RTRI_CATALOG_SQUARE_NORMALIZER};
    else
        kinds = {RTRI_CATALOG_RECTANGLE, RTRI_CATALOG_NORMALIZER};

    bool all_ok = true;
    bool found = false;
    std::vector<json> rows;
    double numerator = 0;
    double denominator = 0;
    for (auto kind : kinds)
    {
        CatalogHandle catalog;
        if (auto s = rtri_catalog_create(kind, args.a, args.b, &catalog.ptr))
            return fail(s);
        std::size_t const n = rtri_catalog_size(catalog.ptr);
        std::vector<rtri_region_result> results(n);
        std::vector<std::size_t> selected;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (args.region == "all"
                || args.region == rtri_catalog_name(catalog.ptr, i))
                selected.push_back(i);
        }
        if (selected.empty())
            continue;
        found = true;
        if (selected.size() == n)
        {
            if (auto s = rtri_catalog_integrate_all(
                    catalog.ptr, &cfg, args.threads, results.data()))
                return fail(s);
        }
        else
        {
            for (std::size_t i : selected)
            {
                if (auto s = rtri_catalog_integrate(
                        catalog.ptr, i, &cfg, &results[i]))
                    return fail(s);
            }
        }
        for (std::size_t i : selected)
        {
            std::string const name = rtri_catalog_name(catalog.ptr, i);
            RationalHandle ref;
            if (auto s = rtri_exact_reference(
                    name.c_str(), args.a, args.b, &ref.ptr))
                return fail(s);
            double const ref_value = rtri_rational_to_double(ref.ptr);
            double const dev
                = std::fabs(results[i].value - ref_value) / ref_value;
            bool const ok = dev <= 10 * args.rel_tol;
            all_ok = all_ok && ok;
            (name.front() == 'I' ? numerator : denominator)
                += results[i].value;
            rows.push_back(json{
                {"region", name},
                {"value", results[i].value},
                {"est_error", results[i].est_error},
                {"reference", rtri_rational_str(ref.ptr)},
                {"reference_value", ref_value},
                {"rel_deviation", dev},
                {"evaluations", results[i].evaluations},
                {"budget_exhausted", results[i].budget_exhausted != 0},
                {"pass", ok},
            });
        }
    }
    if (!found)
    {
        std::cerr << "error: unknown region '" << args.region << "'\n";
        return exit_usage;
    }

    if (args.region == "all")
    {
        RationalHandle ref;
        if (auto s = rtri_exact_reference("RESULT", args.a, args.b, &ref.ptr))
            return fail(s);
        double const ref_value = rtri_rational_to_double(ref.ptr);
        double const value = numerator / denominator;
        double const dev = std::fabs(value - ref_value) / ref_value;
        bool const ok = dev <= 10 * args.rel_tol;
        all_ok = all_ok && ok;
        rows.push_back(json{
            {"region", "RESULT"},
            {"value", value},
            {"numerator", numerator},
            {"denominator", denominator},
            {"reference", rtri_rational_str(ref.ptr)},
            {"reference_value", ref_value},
            {"rel_deviation", dev},
            {"pass", ok},
        });
    }

    if (out.table)
    {
        std::printf("%-7s %22s %12s %14s %12s %s\n", "region", "value",
                    "est_error", "reference", "rel_dev", "pass");
        for (auto const& r : rows)
        {
            std::printf("%-7s %22.15g %12.3e %14s %12.3e %s\n",
                        r["region"].get<std::string>().c_str(),
                        r["value"].get<double>(),
                        r.contains("est_error") ? r["est_error"].get<double>()
                                                : 0.0,
                        r["reference"].get<std::string>().c_str(),
                        r["rel_deviation"].get<double>(),
                        r["pass"].get<bool>() ? "yes" : "NO");
        }
    }
    else
    {
        for (auto const& r : rows)
        {
            json line{{"command", "quad"}};
            line.update(r);
            out.record(line);
        }
    }
    out.record(json{
        {"command", "quad"},
        {"parameters",
         {{"a", args.a},
          {"b", args.b},
          {"region", args.region},
          {"rel_tol", args.rel_tol},
          {"max_depth", args.max_depth},
          {"inner_analytic", !args.numeric_inner},
          {"square", args.square}}},
        {"pass", all_ok},
        {"version", rtri_version()},
        {"wall_seconds", seconds_since(start)},
    });
    return all_ok ? exit_ok : exit_accuracy;
}

//---------------------------------------------------------------------------//
struct McArgs
{
    std::string problem{"interior"};
    std::uint64_t n{1'000'000};
    std::uint64_t seed{1};
    std::uint32_t chunks{64};
    double a{1};
    double b{1};
    unsigned threads{0};
};

int run_mc(McArgs const& args, Output const& out)
{
    auto const start = Clock::now();
    rtri_mc_problem problem{RTRI_MC_INTERIOR, args.a, args.b};
    if (args.problem == "frame")
        problem.kind = RTRI_MC_FRAME;
    else if (args.problem == "tetra")
        problem.kind = RTRI_MC_TETRA;

    rtri_estimate e{};
    if (auto s = rtri_mc_estimate(
            &problem, args.n, args.seed, args.chunks, args.threads, &e))
        return fail(s);

    json result{
        {"mean", e.mean},
        {"variance", e.variance},
        {"stderr", e.std_error},
        {"ci95_low", e.ci95_low},
        {"ci95_high", e.ci95_high},
        {"n", e.n},
        {"seed", e.seed},
        {"chunks", e.chunks},
    };
    if (out.table)
    {
        std::printf("%s: mean %.15g  stderr %.6e  ci95 [%.15g, %.15g]  n %llu\n",
                    args.problem.c_str(), e.mean, e.std_error, e.ci95_low,
                    e.ci95_high, static_cast<unsigned long long>(e.n));
        return exit_ok;
    }
    json params{{"problem", args.problem}, {"n", args.n},
                {"seed", args.seed},       {"chunks", args.chunks}};
    if (problem.kind == RTRI_MC_INTERIOR)
    {
        params["a"] = args.a;
        params["b"] = args.b;
    }
    else if (problem.kind == RTRI_MC_TETRA)
    {
        params["side"] = args.a;
    }
    out.record(json{
        {"command", "mc"},
        {"parameters", params},
        {"result", result},
        {"version", rtri_version()},
        {"wall_seconds", seconds_since(start)},
    });
    return exit_ok;
}

//---------------------------------------------------------------------------//
struct LatticeArgs
{
    int n{10};
    bool symmetric{false};
    std::uint64_t work_cap{100'000'000};
    unsigned threads{0};
};

int run_lattice(LatticeArgs const& args, Output const& out)
{
    auto const start = Clock::now();
    RationalHandle mean;
    if (auto s = rtri_lattice_mean_area(
            args.n, args.work_cap, args.symmetric ? 1 : 0, args.threads,
            &mean.ptr))
        return fail(s);
    if (out.table)
    {
        std::printf("n=%d  mean area %s = %.15g\n", args.n,
                    rtri_rational_str(mean.ptr),
                    rtri_rational_to_double(mean.ptr));
        return exit_ok;
    }
    out.record(json{
        {"command", "lattice"},
        {"parameters", {{"n", args.n}, {"symmetric", args.symmetric}}},
        {"mean", rtri_rational_str(mean.ptr)},
        {"decimal", rtri_rational_to_double(mean.ptr)},
        {"version", rtri_version()},
        {"wall_seconds", seconds_since(start)},
    });
    return exit_ok;
}

//---------------------------------------------------------------------------//
struct FrameArgs
{
    double rel_tol{1e-4};
    int max_depth{12};
    int p1_side{1};
};

int run_frame(FrameArgs const& args, Output const& out)
{
    auto const start = Clock::now();
    rtri_quad_config cfg = rtri_quad_config_default();
    cfg.rel_tol = args.rel_tol;
    cfg.max_depth = args.max_depth;

    json cases = json::array();
    bool ok = true;
    for (int side = 1; side <= 4; ++side)
    {
        for (double x1 : {0.0, 0.25, 0.5, 0.75, 1.0})
        {
            double value = 0;
            double closed = 0;
            if (auto s = rtri_frame_side_case(side, x1, &cfg, &value))
                return fail(s);
            if (auto s = rtri_frame_side_case_closed_form(side, x1, &closed))
                return fail(s);
            ok = ok && std::fabs(value - closed) <= 1e-4;
            cases.push_back(json{{"case", side},
                                 {"x1", x1},
                                 {"value", value},
                                 {"closed_form", closed}});
        }
    }
    rtri_frame_result f{};
    if (auto s = rtri_expected_area_frame(&cfg, args.p1_side, &f))
        return fail(s);
    ok = ok && std::fabs(f.value - 5.0 / 32) <= 1e-4;

    if (out.table)
    {
        for (auto const& c : cases)
        {
            std::printf("case %d  x1 %.2f  value %.15g  closed form %.15g\n",
                        c["case"].get<int>(), c["x1"].get<double>(),
                        c["value"].get<double>(),
                        c["closed_form"].get<double>());
        }
        std::printf("integral of I14 %.15g, mean area %.15g (5/32 = 0.15625)\n",
                    f.numerator, f.value);
        return ok ? exit_ok : exit_accuracy;
    }
    out.record(json{
        {"command", "frame"},
        {"parameters",
         {{"rel_tol", args.rel_tol},
          {"max_depth", args.max_depth},
          {"p1_side", args.p1_side}}},
        {"side_cases", cases},
        {"numerator", f.numerator},
        {"value", f.value},
        {"est_error", f.est_error},
        {"pass", ok},
        {"version", rtri_version()},
        {"wall_seconds", seconds_since(start)},
    });
    return ok ? exit_ok : exit_accuracy;
}

//---------------------------------------------------------------------------//
struct ReportArgs
{
    std::string out_path;
    unsigned threads{0};
    std::uint64_t seed{20240607};
};

int run_report(ReportArgs const& args, Output const& out)
{
    auto const start = Clock::now();
    rtri_report* raw = nullptr;
    if (auto s = rtri_acceptance_run(args.threads, args.seed, &raw))
        return fail(s);
    std::unique_ptr<rtri_report, void (*)(rtri_report*)> report(
        raw, rtri_report_destroy);

    json criteria = json::array();
    for (std::size_t i = 0; i < rtri_report_size(report.get()); ++i)
    {
        rtri_criterion c{};
        if (auto s = rtri_report_entry(report.get(), i, &c))
            return fail(s);
        criteria.push_back(json{
            {"criterion", std::to_string(c.id) + ". " + c.criterion},
            {"expected", c.expected},
            {"actual", c.actual},
            {"tolerance", c.tolerance},
            {"pass", c.pass != 0},
            {"seconds", c.seconds},
        });
        if (out.table)
        {
            std::printf("[%s] %-45s expected %-22s actual %s\n",
                        c.pass ? "PASS" : "FAIL",
                        (std::to_string(c.id) + ". " + c.criterion).c_str(),
                        c.expected, c.actual);
        }
    }
    bool const pass = rtri_report_all_pass(report.get()) != 0;
    json doc{
        {"command", "report"},
        {"version", rtri_version()},
        {"seed", args.seed},
        {"criteria", criteria},
        {"ratio_22_45", rtri_report_ratio_22_45(report.get())},
        {"all_pass", pass},
        {"wall_seconds", seconds_since(start)},
    };
    if (!args.out_path.empty())
    {
        std::ofstream file(args.out_path);
        if (!file)
        {
            std::cerr << "error: cannot write " << args.out_path << '\n';
            return exit_usage;
        }
        file << doc.dump(2) << '\n';
    }
    out.record(doc);
    return pass ? exit_ok : exit_accuracy;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Expected area of random triangles in a rectangle, a square "
                 "and on a square frame"};
    app.require_subcommand(1);
    app.fallthrough();
    bool force_json = false;
    app.add_flag("--json", force_json,
                 "Emit newline-delimited JSON even on a terminal");
    app.set_version_flag("--version", std::string(rtri_version()));

    QuadArgs quad;
    auto* quad_cmd = app.add_subcommand(
        "quad", "Evaluate catalog regions by nested quadrature");
    quad_cmd->add_option("--a", quad.a, "Rectangle width")->capture_default_str();
    quad_cmd->add_option("--b", quad.b, "Rectangle height")->capture_default_str();
    quad_cmd->add_option("--region", quad.region, "Region name or 'all'")
        ->capture_default_str();
    quad_cmd->add_option("--rel-tol", quad.rel_tol, "Relative tolerance")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    quad_cmd->add_option("--max-depth", quad.max_depth, "Subdivision cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    quad_cmd->add_flag("--square", quad.square,
                       "Use the 10-region square catalog (requires a == b)");
    quad_cmd->add_flag("--numeric-inner", quad.numeric_inner,
                       "Integrate x3 and y3 numerically");
    quad_cmd->add_option("--threads", quad.threads, "Worker cap (0 = all)");

    McArgs mc;
    auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo estimate");
    mc_cmd->add_option("--problem", mc.problem)
        ->check(CLI::IsMember({"interior", "frame", "tetra"}))
        ->capture_default_str();
    mc_cmd->add_option("--n", mc.n, "Sample count")->capture_default_str();
    mc_cmd->add_option("--seed", mc.seed)->capture_default_str();
    auto* chunks_opt = mc_cmd->add_option("--chunks", mc.chunks,
                                          "Independent substreams");
    mc_cmd->add_option("--a", mc.a, "Rectangle width or cube side")
        ->capture_default_str();
    mc_cmd->add_option("--b", mc.b, "Rectangle height")->capture_default_str();
    mc_cmd->add_option("--threads", mc.threads, "Worker cap (0 = all)");

    LatticeArgs lattice;
    auto* lattice_cmd = app.add_subcommand(
        "lattice", "Exact mean area over the side-midpoint lattice");
    lattice_cmd->add_option("--n", lattice.n, "Subdivisions per side")
        ->capture_default_str();
    lattice_cmd->add_flag("--symmetric", lattice.symmetric,
                          "Fix p1 on the bottom side and weight by 4");
    lattice_cmd->add_option("--work-cap", lattice.work_cap,
                            "Maximum number of ordered triples")
        ->capture_default_str();
    lattice_cmd->add_option("--threads", lattice.threads, "Worker cap");

    FrameArgs frame;
    auto* frame_cmd = app.add_subcommand(
        "frame", "Side-case polynomials and mean area on the square frame");
    frame_cmd->add_option("--rel-tol", frame.rel_tol)
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    frame_cmd->add_option("--max-depth", frame.max_depth)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    frame_cmd->add_option("--p1-side", frame.p1_side, "Side hosting p1 (1-4)")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();

    ReportArgs report;
    auto* report_cmd
        = app.add_subcommand("report", "Run every acceptance check");
    report_cmd->add_option("--out", report.out_path, "Write JSON report here");
    report_cmd->add_option("--threads", report.threads, "Worker cap");
    report_cmd->add_option("--seed", report.seed, "Monte-Carlo seed")
        ->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::CallForVersion const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return exit_usage;
    }

    Output out;
    out.table = !force_json && isatty(fileno(stdout));

    if (*quad_cmd)
        return run_quad(quad, out);
    if (*mc_cmd)
    {
        if (chunks_opt->count() == 0)
            mc.chunks = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(mc.chunks, mc.n));
        return run_mc(mc, out);
    }
    if (*lattice_cmd)
        return run_lattice(lattice, out);
    if (*frame_cmd)
        return run_frame(frame, out);
    return run_report(report, out);
}
