#pragma once

#include <stdexcept>
#include <vector>

#include "kissing/polynomial.hpp"

namespace kissing {

struct NoRealRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Odd-multiplicity real roots of p in (lo, hi), found by a uniform sign scan
// followed by bisection and a guarded Newton polish.  Even-multiplicity
// touch points do not produce a sign change and are not reported.
std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi,
                                  int scan_points = 4096, double tol = 1e-14);

// Largest real root in (lo, hi); throws NoRealRoot when the sign scan finds
// no crossing.
double greatest_zero(const Polynomial& p, double lo = -1.0, double hi = 1.0);

// Maximum of p over [lo, hi] via endpoints plus critical points (roots of p').
double poly_max_on(const Polynomial& p, double lo, double hi, double* argmax = nullptr);

}  // namespace kissing
