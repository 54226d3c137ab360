// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <doctest.h>

#include "rtri/rtri.h"

namespace
{
std::string str_and_free(rtri_rational* r)
{
    std::string s = rtri_rational_str(r);
    rtri_rational_destroy(r);
    return s;
}
}  // namespace

TEST_CASE("version and status names")
{
    CHECK(std::strlen(rtri_version()) > 0);
    CHECK(std::string(rtri_status_name(RTRI_OK)) == "ok");
    CHECK(std::string(rtri_status_name(RTRI_E_DOMAIN)).size() > 0);
}

TEST_CASE("geometry through the C interface")
{
    double s = 0;
    REQUIRE(rtri_signed_area({0, 0}, {1, 0}, {0, 1}, &s) == RTRI_OK);
    CHECK(s == 0.5);
    REQUIRE(rtri_triangle_area({0, 0}, {0, 1}, {1, 0}, &s) == RTRI_OK);
    CHECK(s == 0.5);
    rtri_orientation o;
    REQUIRE(rtri_orientation_of({0, 0}, {1, 0}, {2, 0}, &o) == RTRI_OK);
    CHECK(o == RTRI_COLLINEAR);
    REQUIRE(rtri_signed_volume_tetra({0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                     {0, 0, 1}, &s)
            == RTRI_OK);
    CHECK(s == doctest::Approx(1.0 / 6));

    CHECK(rtri_signed_area({NAN, 0}, {1, 0}, {0, 1}, &s) == RTRI_E_NON_FINITE);
    CHECK(std::strlen(rtri_last_error()) > 0);
    CHECK(rtri_signed_area({0, 0}, {1, 0}, {0, 1}, nullptr)
          == RTRI_E_INVALID_ARGUMENT);
}

TEST_CASE("catalog handles")
{
    rtri_catalog* cat = nullptr;
    REQUIRE(rtri_catalog_create(RTRI_CATALOG_RECTANGLE, 1, 1, &cat) == RTRI_OK);
    REQUIRE(rtri_catalog_size(cat) == 5);
    CHECK(std::string(rtri_catalog_name(cat, 0)) == "I1");
    CHECK(rtri_catalog_sign(cat, 2) == -1);
    CHECK(std::string(rtri_catalog_name(cat, 99)).empty());

    double const inside[6] = {0.2, 0.3, 0.4, 0.9, 0.42, 0.99};
    CHECK(rtri_catalog_contains(cat, 0, inside) == 1);
    CHECK(rtri_catalog_contains(cat, 3, inside) == 0);

    rtri_quad_config const cfg = rtri_quad_config_default();
    CHECK(cfg.rel_tol == 1e-4);
    CHECK(cfg.max_depth == 12);
    CHECK(cfg.inner_analytic == 1);

    rtri_region_result r;
    REQUIRE(rtri_catalog_integrate(cat, 0, &cfg, &r) == RTRI_OK);
    CHECK(r.value == doctest::Approx(1.0 / 34560).epsilon(1e-4));
    CHECK(r.budget_exhausted == 0);
    CHECK(rtri_catalog_integrate(cat, 5, &cfg, &r) == RTRI_E_INVALID_ARGUMENT);

    std::vector<rtri_region_result> all(rtri_catalog_size(cat));
    REQUIRE(rtri_catalog_integrate_all(cat, nullptr, 1, all.data()) == RTRI_OK);
    CHECK(all[4].value == doctest::Approx(37.0 / 34560).epsilon(1e-4));
    rtri_catalog_destroy(cat);

    CHECK(rtri_catalog_create(RTRI_CATALOG_SQUARE, 1, 2, &cat)
          == RTRI_E_DOMAIN);
    CHECK(rtri_catalog_create(RTRI_CATALOG_RECTANGLE, 0, 2, &cat)
          == RTRI_E_DOMAIN);
    rtri_catalog_destroy(nullptr);
}

TEST_CASE("area ratios and references")
{
    rtri_area_ratio r;
    REQUIRE(rtri_expected_area_interior(2, 3, nullptr, 0, &r) == RTRI_OK);
    CHECK(r.value == doctest::Approx(11.0 / 24).epsilon(2e-4));
    REQUIRE(rtri_expected_area_square(1, nullptr, 0, &r) == RTRI_OK);
    CHECK(r.value == doctest::Approx(11.0 / 144).epsilon(2e-4));

    rtri_rational* q = nullptr;
    REQUIRE(rtri_exact_reference("I4", 1, 1, &q) == RTRI_OK);
    rtri_rational* q2 = nullptr;
    REQUIRE(rtri_exact_reference("I6", 1, 1, &q2) == RTRI_OK);
    CHECK(rtri_rational_equal(q, q2) == 1);
    CHECK(rtri_rational_to_double(q) == doctest::Approx(19.0 / 34560));
    CHECK(str_and_free(q) == "19/34560");
    rtri_rational_destroy(q2);
    CHECK(rtri_exact_reference("nope", 1, 1, &q) == RTRI_E_UNKNOWN_NAME);
    CHECK(rtri_exact_reference(nullptr, 1, 1, &q) == RTRI_E_INVALID_ARGUMENT);
}

TEST_CASE("frame functions")
{
    rtri_point2 p;
    REQUIRE(rtri_frame_point(1.5, &p) == RTRI_OK);
    CHECK(p.x == 1);
    CHECK(p.y == 0.5);
    CHECK(rtri_frame_point(4, &p) == RTRI_E_DOMAIN);

    double v = 0;
    REQUIRE(rtri_frame_side_case(2, 1, nullptr, &v) == RTRI_OK);
    CHECK(v == doctest::Approx(0.5));
    REQUIRE(rtri_frame_side_case_closed_form(4, 0, &v) == RTRI_OK);
    CHECK(v == 0.5);
    CHECK(rtri_frame_side_case(7, 0, nullptr, &v) == RTRI_E_INVALID_ARGUMENT);
    REQUIRE(rtri_frame_sum(0.5, nullptr, &v) == RTRI_OK);
    CHECK(v == doctest::Approx(7.0 / 3));

    rtri_frame_result f;
    REQUIRE(rtri_expected_area_frame(nullptr, 3, &f) == RTRI_OK);
    CHECK(f.value == doctest::Approx(5.0 / 32));
    CHECK(f.numerator == doctest::Approx(2.5));
}

TEST_CASE("lattice functions")
{
    rtri_rational* x = nullptr;
    rtri_rational* y = nullptr;
    REQUIRE(rtri_lattice_point(10, 0, &x, &y) == RTRI_OK);
    CHECK(str_and_free(x) == "1/20");
    CHECK(str_and_free(y) == "0/1");
    CHECK(rtri_lattice_point(1, 4, &x, &y) == RTRI_E_INVALID_ARGUMENT);

    rtri_rational* m = nullptr;
    REQUIRE(rtri_lattice_mean_area(10, 0, 0, 0, &m) == RTRI_OK);
    CHECK(str_and_free(m) == "249/1600");
    REQUIRE(rtri_lattice_mean_area(1, 0, 1, 1, &m) == RTRI_OK);
    CHECK(str_and_free(m) == "3/32");
    CHECK(rtri_lattice_mean_area(0, 0, 0, 0, &m) == RTRI_E_INVALID_ARGUMENT);
    CHECK(rtri_lattice_mean_area(5, 100, 0, 0, &m) == RTRI_E_WORK_LIMIT);
}

TEST_CASE("Monte Carlo through the C interface")
{
    rtri_mc_problem const p{RTRI_MC_TETRA, 1, 1};
    rtri_estimate a, b;
    REQUIRE(rtri_mc_estimate(&p, 10000, 5, 8, 1, &a) == RTRI_OK);
    REQUIRE(rtri_mc_estimate(&p, 10000, 5, 8, 4, &b) == RTRI_OK);
    CHECK(std::memcmp(&a.mean, &b.mean, sizeof a.mean) == 0);
    CHECK(a.variance == b.variance);
    CHECK(a.n == 10000);
    CHECK(a.chunks == 8);
    CHECK(a.ci95_low < a.mean);

    rtri_mc_problem const bad{RTRI_MC_INTERIOR, -1, 1};
    CHECK(rtri_mc_estimate(&bad, 100, 1, 1, 1, &a) == RTRI_E_DOMAIN);
    CHECK(rtri_mc_estimate(&p, 1, 1, 1, 1, &a) == RTRI_E_INVALID_ARGUMENT);
    rtri_mc_problem const unknown{static_cast<rtri_mc_kind>(9), 1, 1};
    CHECK(rtri_mc_estimate(&unknown, 100, 1, 1, 1, &a)
          == RTRI_E_INVALID_ARGUMENT);
}
