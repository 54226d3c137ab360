// SPDX-License-Identifier: Apache-2.0
//! \file acceptance.hpp
//! End-to-end acceptance checks shared by the CLI report and the test suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtri/monte_carlo.hpp"

namespace rtri
{

struct CriterionResult
{
    int id{0};              //!< acceptance criterion number (1-9)
    std::string criterion;  //!< short description of this check
    std::string expected;
    std::string actual;
    std::string tolerance;
    bool pass{false};
    double seconds{0};
};

struct AcceptanceOptions
{
    unsigned threads{0};
    Seed seed{20240607};
    std::uint64_t mc_samples{10'000'000};
    //! Random cases per property suite
    std::uint64_t property_cases{10'000};
};

struct AcceptanceReport
{
    std::vector<CriterionResult> entries;
    //! Quadrature interior / frame mean-area ratio
    double ratio_22_45{0};

    bool all_pass() const;
    //! Whether every entry with this criterion id passed
    bool passed(int id) const;
};

AcceptanceReport run_acceptance(AcceptanceOptions const& opts = {});

}  // namespace rtri
