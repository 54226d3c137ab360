// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtri
{

//! Arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

//! Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double v);

//! "p/q" form; integers print as "p/1".
std::string to_string(Rational const& r);

double to_double(Rational const& r);

}  // namespace rtri
