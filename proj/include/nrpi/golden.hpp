#pragma once

#include <cmath>
#include <utility>

namespace nrpi {

// Golden-section search for a local minimum of f on [a, b].
// Returns (x, f(x)). Assumes f is unimodal on the bracket; on a flat or
// noisy objective it still converges to a point of the bracket.
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, double xtol = 1e-10) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double inv_phi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.381...

    double h = b - a;
    double x1 = a + inv_phi2 * h;
    double x2 = a + inv_phi * h;
    double f1 = f(x1);
    double f2 = f(x2);

    while (h > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            h = b - a;
            x1 = a + inv_phi2 * h;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            h = b - a;
            x2 = a + inv_phi * h;
            f2 = f(x2);
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Golden-section search for a local maximum of f on [a, b].
template <typename F>
std::pair<double, double> golden_maximize(F&& f, double a, double b, double xtol = 1e-10) {
    auto [x, neg] = golden_minimize([&](double t) { return -f(t); }, a, b, xtol);
    return {x, -neg};
}

}  // namespace nrpi
