#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "kissing/polynomial.hpp"

namespace kissing {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalPoly = Poly<Rational>;

Rational rational_binomial(int n, int k);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

// Exact check that p(t) <= 0 for all t in [lo, hi].  Sturm sequences locate
// every distinct real root; the sign of p on each root-free segment is then
// decided by one exact sample.  Returns a witness with p(witness) > 0 when
// the check fails.
bool nonpositive_on(const RationalPoly& p, const Rational& lo, const Rational& hi,
                    Rational* witness = nullptr);

RationalPoly to_rational(const Polynomial& p);
Polynomial to_double_poly(const RationalPoly& p);

}  // namespace kissing
