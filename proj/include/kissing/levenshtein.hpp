#pragma once

#include "kissing/bound_report.hpp"
#include "kissing/exact.hpp"
#include "kissing/gegenbauer.hpp"
#include "kissing/polynomial.hpp"

namespace kissing {

// Index m of the interval I_m containing s.  The brackets tile [-1, 1):
//   I_0    = [-1, t_1^{1,0})
//   I_2k   = [t_k^{1,0}, t_k^{1,1})
//   I_2k+1 = [t_k^{1,1}, t_{k+1}^{1,0})
// where t_k^{a,b} is the greatest zero of the degree-k adjacent polynomial.
// An s within snap_tol of a shared endpoint is assigned the smaller m (the
// two closed-form bounds coincide there).
struct IntervalIndex {
    int m = 0;
    double lo = -1.0;
    double hi = 1.0;
};

double adjacent_greatest_zero(int n, int a, int b, int k);

IntervalIndex interval_index(int n, double s, double snap_tol = 1e-12);

// Closed-form universal bound L_m(n, s) for m >= 2; m in {0, 1} evaluates
// the degenerate linear case 1 - 1/s.
template <typename T>
T levenshtein_value(int n, const T& s, int m);

BoundReport levenshtein_bound(int n, double s);

// Same selection path, value computed in exact rational arithmetic.
BoundReport levenshtein_bound_exact(int n, const Rational& s);

// The degree-m extremal polynomial f_m^{(n,s)} built from reproducing
// kernels of the adjacent families; validated against the closed form.
Polynomial levenshtein_polynomial(int n, double s);

struct KernelConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- implementation of the templated closed form ----

template <typename T>
T levenshtein_value(int n, const T& s, int m) {
    if (n < 3) throw std::invalid_argument("levenshtein_value: dimension must be >= 3");
    if (m <= 1) {
        // L_1(n, s) = 1 - 1/s on I_0, the simplex-type bound
        if (s == T(0)) throw std::invalid_argument("levenshtein_value: s=0 outside I_0");
        return T(1) - T(1) / s;
    }
    if (m % 2 == 1) {
        int k = (m + 1) / 2;
        auto P = gegenbauer_values<T>(n, k, s);
        T binom(1);
        for (int i = 0; i < k - 1; ++i) binom = binom * T(k + n - 3 - i) / T(i + 1);
        T frac = (P[k - 1] - P[k]) / ((T(1) - s) * P[k]);
        return binom * (T(2 * k + n - 3) / T(n - 1) - frac);
    }
    int k = m / 2;
    auto P = gegenbauer_values<T>(n, k + 1, s);
    T binom(1);
    for (int i = 0; i < k; ++i) binom = binom * T(k + n - 2 - i) / T(i + 1);
    T frac = (T(1) + s) * (P[k] - P[k + 1]) / ((T(1) - s) * (P[k] + P[k + 1]));
    return binom * (T(2 * k + n - 1) / T(n - 1) - frac);
}

}  // namespace kissing
