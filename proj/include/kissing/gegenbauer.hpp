#pragma once

#include <stdexcept>
#include <vector>

#include "kissing/polynomial.hpp"

namespace kissing {

// Gegenbauer polynomials P_k^{(n)}, normalized so P_k(1) = 1, built from
//   P_0 = 1,  P_1 = t,  (k+n-2) P_{k+1} = (2k+n-2) t P_k - k P_{k-1}.
template <typename T>
Poly<T> gegenbauer(int n, int k) {
    if (n < 3) throw std::invalid_argument("gegenbauer: dimension must be >= 3");
    if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
    Poly<T> prev = Poly<T>::constant(T(1));
    if (k == 0) return prev;
    Poly<T> cur = Poly<T>::x();
    for (int j = 1; j < k; ++j) {
        Poly<T> next = (Poly<T>::x() * cur * T(2 * j + n - 2) - prev * T(j)) * (T(1) / T(j + n - 2));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Pointwise evaluation of P_0..P_k at t via the same recurrence.
template <typename T>
std::vector<T> gegenbauer_values(int n, int k, const T& t) {
    if (n < 3) throw std::invalid_argument("gegenbauer_values: dimension must be >= 3");
    std::vector<T> v(static_cast<std::size_t>(k) + 1);
    v[0] = T(1);
    if (k >= 1) v[1] = t;
    for (int j = 1; j < k; ++j)
        v[j + 1] = (T(2 * j + n - 2) * t * v[j] - T(j) * v[j - 1]) / T(j + n - 2);
    return v;
}

// Coefficients of a polynomial in the P_k^{(n)} basis.
template <typename T>
struct GegenbauerExpansion {
    int n = 0;
    std::vector<T> coeffs;  // f_0 .. f_m

    Poly<T> reconstruct() const {
        Poly<T> sum;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            sum = sum + gegenbauer<T>(n, static_cast<int>(k)) * coeffs[k];
        return sum;
    }
};

// Expansion by repeated leading-coefficient elimination; exact up to the
// scalar type's rounding.
template <typename T>
GegenbauerExpansion<T> gegenbauer_expand(int n, const Poly<T>& p) {
    if (n < 3) throw std::invalid_argument("gegenbauer_expand: dimension must be >= 3");
    GegenbauerExpansion<T> ex;
    ex.n = n;
    if (p.is_zero()) {
        ex.coeffs = {T(0)};
        return ex;
    }
    int deg = p.degree();
    ex.coeffs.assign(static_cast<std::size_t>(deg) + 1, T(0));
    std::vector<Poly<T>> basis;
    basis.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) basis.push_back(gegenbauer<T>(n, k));
    Poly<T> r = p;
    for (int k = deg; k >= 0; --k) {
        T fk = r.coeff(k) / basis[k].coeff(k);
        ex.coeffs[k] = fk;
        if (!(fk == T(0))) r = r - basis[k] * fk;
    }
    return ex;
}

// Adjacent Jacobi parameters: (alpha, beta) = (a + (n-3)/2, b + (n-3)/2).
struct JacobiParams {
    int n = 3;
    int a = 0;
    int b = 0;

    double alpha() const { return a + (n - 3) / 2.0; }
    double beta() const { return b + (n - 3) / 2.0; }
};

// Degree-k Jacobi polynomial in the standard normalization (Szego 4.5.1
// recurrence), value at 1 equals binom(k+alpha, k) > 0.
Polynomial jacobi_standard(double alpha, double beta, int k);

// Adjacent polynomial normalized so its value at 1 is exactly 1.
Polynomial jacobi_adjacent(const JacobiParams& params, int k);

// Squared L2 norm of jacobi_standard(alpha, beta, k) under the weight
// (1-t)^alpha (1+t)^beta on [-1, 1].
double jacobi_norm(double alpha, double beta, int k);

// Christoffel-Darboux reproducing kernel sum_{i<=j} P_i(t) P_i(s) / h_i of
// the adjacent family, as a polynomial in t for fixed s.
Polynomial jacobi_kernel(const JacobiParams& params, int j, double s);

}  // namespace kissing
