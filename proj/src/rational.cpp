// SPDX-License-Identifier: Apache-2.0
#include "rtri/rational.hpp"

#include <cmath>

#include "rtri/error.hpp"

namespace rtri
{

Rational to_rational(double v)
{
    if (!std::isfinite(v))
    {
        throw Error(Errc::NonFinite, "cannot convert non-finite value");
    }
    int exp = 0;
    double const mant = std::frexp(v, &exp);
    // mant * 2^53 is an integer for any double
    auto const scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r{BigInt(scaled)};
    if (exp > 0)
    {
        r *= BigInt(1) << exp;
    }
    else if (exp < 0)
    {
        r /= BigInt(1) << -exp;
    }
    return r;
}

std::string to_string(Rational const& r)
{
    return boost::multiprecision::numerator(r).str() + "/"
           + boost::multiprecision::denominator(r).str();
}

double to_double(Rational const& r)
{
    return r.convert_to<double>();
}

}  // namespace rtri
