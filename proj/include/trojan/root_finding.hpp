#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace trojan {

/// Bracketed bisection/secant hybrid. Requires f(lo) and f(hi) of opposite
/// sign (either may be zero). Secant steps are taken while they land inside
/// the bracket; every other iteration bisects regardless, so the bracket
/// provably halves at least once per two iterations. Stops when the bracket
/// width drops below rel_tol * max(|lo|, |hi|) or an exact zero is hit.
template <class F>
double find_root_bracketed(F&& f, double lo, double hi, double rel_tol = 1e-14) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw std::invalid_argument("find_root_bracketed: endpoints do not bracket a root");

    for (int iter = 0; iter < 200; ++iter) {
        const double width = hi - lo;
        if (width <= rel_tol * std::max(std::abs(lo), std::abs(hi)))
            break;

        double step = 0.5;
        if (iter % 2 == 0) {
            // secant through the bracket endpoints, clipped away from them
            const double s = flo / (flo - fhi);
            if (s > 1e-3 && s < 1.0 - 1e-3) step = s;
        }
        const double x = lo + step * width;
        if (x <= lo || x >= hi) break;  // bracket exhausted at this precision
        const double fx = f(x);

        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace trojan
