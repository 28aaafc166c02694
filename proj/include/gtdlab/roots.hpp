#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "gtdlab/errors.hpp"
#include "gtdlab/numeric.hpp"

namespace gtdlab::roots {

struct InvertOptions {
    double x_tol = 1e-14;
    double f_tol = 1e-13;
    int max_iter = 200;
};

// Solve F(x) = target for strictly increasing F on the bracket [lo, hi].
// Safeguarded Newton when a derivative is supplied, bisection otherwise;
// every Newton step is kept inside the current bracket.
inline double invert_increasing(const std::function<double(double)>& F, double target,
                                double lo, double hi,
                                const std::function<double(double)>& dF = nullptr,
                                const InvertOptions& opts = {}) {
    double flo = F(lo) - target;
    double fhi = F(hi) - target;
    if (flo > 0.0 && fhi > 0.0) return lo;
    if (flo < 0.0 && fhi < 0.0) return hi;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < opts.max_iter; ++it) {
        double fx = F(x) - target;
        const double scale = std::max(1.0, std::fabs(target));
        if (std::fabs(fx) <= opts.f_tol * scale && hi - lo <= opts.x_tol * std::max(1.0, std::fabs(x)))
            return x;
        if (fx == 0.0) return x;
        if (fx > 0.0) hi = x; else lo = x;
        if (hi - lo <= opts.x_tol * std::max(1.0, std::fabs(x)) &&
            std::fabs(fx) <= opts.f_tol * scale)
            return 0.5 * (lo + hi);

        double next = kNaN;
        if (dF) {
            const double d = dF(x);
            if (std::isfinite(d) && d > 0.0) {
                const double step = fx / d;
                const double cand = x - step;
                if (cand > lo && cand < hi) next = cand;
            }
        }
        if (!std::isfinite(next)) next = 0.5 * (lo + hi);
        x = next;
    }
    // bracket is still valid; report the midpoint if it is tight enough
    if (hi - lo <= 1e-9 * std::max(1.0, std::fabs(x))) return 0.5 * (lo + hi);
    throw NumericError("invert_increasing: no convergence after max iterations");
}

} // namespace gtdlab::roots
