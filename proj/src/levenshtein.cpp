#include "kissing/levenshtein.hpp"

#include <cmath>
#include <map>

#include "kissing/roots.hpp"

namespace kissing {

namespace {

// greatest zeros are reused heavily by interval scans; cache per (n,a,b,k)
double cached_greatest_zero(int n, int a, int b, int k) {
    static thread_local std::map<std::tuple<int, int, int, int>, double> cache;
    auto key = std::make_tuple(n, a, b, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    JacobiParams params{n, a, b};
    double z = greatest_zero(jacobi_adjacent(params, k));
    cache.emplace(key, z);
    return z;
}

}  // namespace

double adjacent_greatest_zero(int n, int a, int b, int k) {
    if (n < 3) throw std::invalid_argument("adjacent_greatest_zero: dimension must be >= 3");
    if (k < 1) throw std::invalid_argument("adjacent_greatest_zero: degree must be >= 1");
    return cached_greatest_zero(n, a, b, k);
}

IntervalIndex interval_index(int n, double s, double snap_tol) {
    if (n < 3) throw std::invalid_argument("interval_index: dimension must be >= 3");
    if (s >= 1.0) throw std::out_of_range("interval_index: s must be < 1");
    if (s < -1.0) throw std::out_of_range("interval_index: s must be >= -1");

    double t1 = adjacent_greatest_zero(n, 1, 0, 1);  // -1/n
    if (s < t1 - snap_tol) return {0, -1.0, t1};
    for (int k = 1; k < 200; ++k) {
        double lo_even = adjacent_greatest_zero(n, 1, 0, k);
        double hi_even = adjacent_greatest_zero(n, 1, 1, k);
        if (s < hi_even - snap_tol) return {2 * k, lo_even, hi_even};
        double hi_odd = adjacent_greatest_zero(n, 1, 0, k + 1);
        if (s < hi_odd - snap_tol) return {2 * k + 1, hi_even, hi_odd};
    }
    throw std::logic_error("interval_index: interval search exhausted");
}

BoundReport levenshtein_bound(int n, double s) {
    IntervalIndex idx = interval_index(n, s);
    double value = levenshtein_value<double>(n, s, idx.m);
    BoundReport r;
    r.n = n;
    r.s = s;
    r.method = "levenshtein";
    r.value = value;
    r.floor_value = floor_bound(value);
    r.rigorous = true;
    r.certificate["m"] = idx.m;
    r.certificate["interval"] = {idx.lo, idx.hi};
    return r;
}

BoundReport levenshtein_bound_exact(int n, const Rational& s) {
    IntervalIndex idx = interval_index(n, to_double(s));
    Rational value = levenshtein_value<Rational>(n, s, idx.m);
    BoundReport r;
    r.n = n;
    r.s = to_double(s);
    r.method = "levenshtein";
    r.value = to_double(value);
    r.exact_value = to_string(value);
    r.floor_value = floor_bound(r.value);
    r.rigorous = true;
    r.certificate["m"] = idx.m;
    r.certificate["mode"] = "exact-rational";
    return r;
}

Polynomial levenshtein_polynomial(int n, double s) {
    IntervalIndex idx = interval_index(n, s);
    int m = idx.m;
    Polynomial f;
    if (m <= 1) {
        f = Polynomial(std::vector<double>{-s, 1.0});
    } else if (m % 2 == 1) {
        int k = (m + 1) / 2;
        Polynomial kern = jacobi_kernel(JacobiParams{n, 1, 0}, k - 1, s);
        f = Polynomial(std::vector<double>{-s, 1.0}) * kern * kern;
    } else {
        int k = m / 2;
        Polynomial kern = jacobi_kernel(JacobiParams{n, 1, 1}, k - 1, s);
        f = Polynomial(std::vector<double>{1.0, 1.0}) *
            Polynomial(std::vector<double>{-s, 1.0}) * kern * kern;
    }
    // scale to f(1) = 1 to keep coefficients tame
    f = f * (1.0 / f(1.0));

    // the closed form is the independent oracle for the kernel convention
    auto ex = gegenbauer_expand<double>(n, f);
    double ratio = f(1.0) / ex.coeffs[0];
    double reference = levenshtein_value<double>(n, s, m);
    if (std::abs(ratio - reference) > 1e-8 * std::abs(reference))
        throw KernelConstructionFailure("levenshtein_polynomial: kernel ratio " +
                                        std::to_string(ratio) + " disagrees with closed form " +
                                        std::to_string(reference));
    return f;
}

}  // namespace kissing
