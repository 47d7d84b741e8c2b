#include "kissing/roots.hpp"

#include <cmath>

namespace kissing {

namespace {

double bisect(const Polynomial& p, double a, double b, double fa, double tol) {
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        double m = 0.5 * (a + b);
        double fm = p(m);
        if (fm == 0.0) return m;
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double newton_polish(const Polynomial& p, const Polynomial& dp, double x, double lo, double hi) {
    for (int it = 0; it < 8; ++it) {
        double d = dp(x);
        if (std::abs(d) < 1e-300) break;
        double step = p(x) / d;
        double nx = x - step;
        if (nx < lo || nx > hi || !std::isfinite(nx)) break;
        x = nx;
        if (std::abs(step) < 1e-16) break;
    }
    return x;
}

}  // namespace

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi, int scan_points,
                                  double tol) {
    std::vector<double> roots;
    if (p.is_zero() || p.degree() == 0 || !(lo < hi)) return roots;
    Polynomial dp = p.derivative();
    double prev_t = lo;
    double prev_v = p(lo);
    if (prev_v == 0.0) roots.push_back(lo);
    for (int i = 1; i <= scan_points; ++i) {
        double t = lo + (hi - lo) * i / scan_points;
        double v = p(t);
        if (v == 0.0) {
            roots.push_back(t);
        } else if ((prev_v < 0) != (v < 0) && prev_v != 0.0) {
            double r = bisect(p, prev_t, t, prev_v, tol);
            roots.push_back(newton_polish(p, dp, r, prev_t, t));
        }
        prev_t = t;
        prev_v = v;
    }
    // merge near-duplicates from scan points landing on roots
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || std::abs(r - out.back()) > 1e-11) out.push_back(r);
    return out;
}

double greatest_zero(const Polynomial& p, double lo, double hi) {
    std::vector<double> roots = real_roots_in(p, lo, hi);
    if (roots.empty()) throw NoRealRoot("no sign change found in interval");
    return roots.back();
}

double poly_max_on(const Polynomial& p, double lo, double hi, double* argmax) {
    double best = p(lo);
    double arg = lo;
    double vhi = p(hi);
    if (vhi > best) {
        best = vhi;
        arg = hi;
    }
    for (double c : real_roots_in(p.derivative(), lo, hi)) {
        double v = p(c);
        if (v > best) {
            best = v;
            arg = c;
        }
    }
    if (argmax) *argmax = arg;
    return best;
}

}  // namespace kissing
