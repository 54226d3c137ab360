// SPDX-License-Identifier: Apache-2.0
//! \file quadrature.hpp
//! Globally adaptive one-dimensional Gauss-Kronrod (7/15) quadrature.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

namespace rtri
{

//! Value and error of a (possibly nested) integral.
struct QuadEstimate
{
    double value{0};
    double error{0};
    std::uint64_t evaluations{0};
    bool converged{true};
};

struct AdaptiveOptions
{
    double rel_tol{1e-6};
    double abs_tol{0};
    //! Pieces are never narrower than (hi - lo) / 2^max_depth
    int max_depth{12};
};

namespace detail
{
// Kronrod abscissae on [0,1]; odd indices are the embedded Gauss nodes.
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> gk15_kronrod_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> gk15_gauss_weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template<class F>
QuadEstimate call_integrand(F& f, double x)
{
    using R = std::invoke_result_t<F&, double>;
    if constexpr (std::is_same_v<R, QuadEstimate>)
    {
        return f(x);
    }
    else
    {
        return QuadEstimate{static_cast<double>(f(x)), 0.0, 1, true};
    }
}

struct Piece
{
    double lo;
    double hi;
    double value;
    double error;        // discretization error of this piece
    double inner_error;  // propagated error of nested integrals
    int depth;
};

/*!
 * Apply the 15-point Kronrod rule on [lo, hi].
 *
 * The error estimate is the QUADPACK QK15 heuristic, floored at the
 * round-off level of the absolute integral.
 */
template<class F>
Piece gk15_piece(F& f, double lo, double hi, int depth, QuadEstimate& acc)
{
    double const center = 0.5 * (lo + hi);
    double const half = 0.5 * (hi - lo);

    std::array<double, 15> fv{};
    double inner_err = 0;
    auto eval = [&](int slot, double x, double w) {
        QuadEstimate e = call_integrand(f, x);
        fv[slot] = e.value;
        inner_err += w * std::fabs(e.error);
        acc.evaluations += e.evaluations;
        acc.converged = acc.converged && e.converged;
    };

    eval(14, center, gk15_kronrod_weights[7]);
    for (int j = 0; j < 7; ++j)
    {
        double const dx = half * gk15_nodes[j];
        eval(2 * j, center - dx, gk15_kronrod_weights[j]);
        eval(2 * j + 1, center + dx, gk15_kronrod_weights[j]);
    }

    double const fc = fv[14];
    double kronrod = gk15_kronrod_weights[7] * fc;
    double gauss = gk15_gauss_weights[3] * fc;
    double resabs = std::fabs(kronrod);
    for (int j = 0; j < 7; ++j)
    {
        double const pair = fv[2 * j] + fv[2 * j + 1];
        kronrod += gk15_kronrod_weights[j] * pair;
        resabs += gk15_kronrod_weights[j]
                  * (std::fabs(fv[2 * j]) + std::fabs(fv[2 * j + 1]));
        if (j % 2 == 1)
        {
            gauss += gk15_gauss_weights[j / 2] * pair;
        }
    }
    double const mean = 0.5 * kronrod;
    double resasc = gk15_kronrod_weights[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
    {
        resasc += gk15_kronrod_weights[j]
                  * (std::fabs(fv[2 * j] - mean)
                     + std::fabs(fv[2 * j + 1] - mean));
    }

    double const ahalf = std::fabs(half);
    double err = std::fabs((kronrod - gauss) * half);
    resabs *= ahalf;
    resasc *= ahalf;
    if (resasc != 0 && err != 0)
    {
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50 * eps))
    {
        err = std::max(50 * eps * resabs, err);
    }

    return Piece{lo, hi, kronrod * half, err, inner_err * ahalf, depth};
}
}  // namespace detail

/*!
 * Integrate f over [lo, hi].
 *
 * The integrand may return a plain number or a QuadEstimate (for nested
 * integrals); nested error estimates are integrated with the Kronrod
 * weights and added to the returned error. The interval with the largest
 * error is bisected until the discretization error meets
 * max(rel_tol * |value|, abs_tol). An empty or reversed interval yields
 * zero. If every remaining candidate piece sits at max_depth the result is
 * returned with converged = false.
 */
template<class F>
QuadEstimate
integrate_adaptive(F&& f, double lo, double hi, AdaptiveOptions const& opts)
{
    QuadEstimate result;
    if (!(hi > lo))
    {
        return result;
    }

    std::vector<detail::Piece> pieces;
    pieces.push_back(detail::gk15_piece(f, lo, hi, 0, result));

    auto totals = [&pieces](double& value, double& error) {
        value = 0;
        error = 0;
        for (auto const& p : pieces)
        {
            value += p.value;
            error += p.error;
        }
    };

    double value = 0;
    double error = 0;
    totals(value, error);
    bool exhausted = false;
    while (error > std::max(opts.rel_tol * std::fabs(value), opts.abs_tol))
    {
        std::size_t worst = pieces.size();
        for (std::size_t i = 0; i < pieces.size(); ++i)
        {
            if (pieces[i].depth >= opts.max_depth)
                continue;
            if (worst == pieces.size() || pieces[i].error > pieces[worst].error)
                worst = i;
        }
        if (worst == pieces.size())
        {
            exhausted = true;
            break;
        }
        detail::Piece const parent = pieces[worst];
        double const mid = 0.5 * (parent.lo + parent.hi);
        pieces[worst]
            = detail::gk15_piece(f, parent.lo, mid, parent.depth + 1, result);
        pieces.push_back(
            detail::gk15_piece(f, mid, parent.hi, parent.depth + 1, result));
        totals(value, error);
    }

    double inner = 0;
    for (auto const& p : pieces)
    {
        inner += p.inner_error;
    }
    result.value = value;
    result.error = error + inner;
    result.converged = result.converged && !exhausted;
    return result;
}

}  // namespace rtri
