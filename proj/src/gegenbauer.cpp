#include "kissing/gegenbauer.hpp"

#include <cmath>

namespace kissing {

Polynomial jacobi_standard(double alpha, double beta, int k) {
    if (k < 0) throw std::invalid_argument("jacobi_standard: degree must be >= 0");
    Polynomial p0 = Polynomial::constant(1.0);
    if (k == 0) return p0;
    Polynomial p1(std::vector<double>{(alpha - beta) / 2.0, (alpha + beta + 2.0) / 2.0});
    for (int m = 2; m <= k; ++m) {
        double ab = alpha + beta;
        double a1 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        double a2 = (2.0 * m + ab - 1.0) * (alpha * alpha - beta * beta);
        double a3 = (2.0 * m + ab - 1.0) * (2.0 * m + ab) * (2.0 * m + ab - 2.0);
        double a4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
        Polynomial pm = (p1 * a2 + Polynomial::x() * p1 * a3 - p0 * a4) * (1.0 / a1);
        p0 = std::move(p1);
        p1 = std::move(pm);
    }
    return p1;
}

Polynomial jacobi_adjacent(const JacobiParams& params, int k) {
    if (params.n < 3) throw std::invalid_argument("jacobi_adjacent: dimension must be >= 3");
    Polynomial p = jacobi_standard(params.alpha(), params.beta(), k);
    double at1 = p(1.0);
    if (at1 == 0.0) throw std::logic_error("jacobi_adjacent: zero value at t=1");
    return p * (1.0 / at1);
}

double jacobi_norm(double alpha, double beta, int k) {
    double logn = (alpha + beta + 1.0) * std::log(2.0) + std::lgamma(k + alpha + 1.0) +
                  std::lgamma(k + beta + 1.0) - std::lgamma(k + alpha + beta + 1.0) -
                  std::lgamma(k + 1.0);
    return std::exp(logn) / (2.0 * k + alpha + beta + 1.0);
}

Polynomial jacobi_kernel(const JacobiParams& params, int j, double s) {
    Polynomial sum;
    for (int i = 0; i <= j; ++i) {
        Polynomial pi = jacobi_standard(params.alpha(), params.beta(), i);
        double w = pi(s) / jacobi_norm(params.alpha(), params.beta(), i);
        sum = sum + pi * w;
    }
    return sum;
}

}  // namespace kissing
