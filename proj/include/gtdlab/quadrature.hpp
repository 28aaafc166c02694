#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "gtdlab/numeric.hpp"

namespace gtdlab::quad {

using Fn = std::function<double(double)>;

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-11;
    int max_depth = 48;          // bisection depth per segment
    long max_evaluations = 4'000'000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;          // accumulated error estimate
    long evaluations = 0;
    bool converged = true;

    Result& operator+=(const Result& r) {
        value += r.value;
        error += r.error;
        evaluations += r.evaluations;
        converged = converged && r.converged;
        return *this;
    }
};

// Single non-adaptive Gauss(7)/Kronrod(15) panel on [a, b].
Result gk15_panel(const Fn& f, double a, double b);

// Adaptive integration over the finite interval [a, b].
Result integrate_finite(const Fn& f, double a, double b, const Options& opts = {});

// Adaptive integration over a path of breakpoints; the first/last entry may be
// -inf/+inf, handled by the tangent substitution x = tan(t). Interior
// breakpoints should mark kinks (|x| at 0, support borders, ...).
Result integrate(const Fn& f, const std::vector<double>& points, const Options& opts = {});

// Convenience: integrate over (a, b) splitting at any interior breakpoints
// that fall inside; infinite ends allowed.
Result integrate(const Fn& f, double a, double b, const Options& opts = {});

struct ImproperResult {
    double value = 0.0;
    double error = 0.0;
    bool finite = true;          // false: divergence detected, value = +-inf
    std::string diagnostic;      // set when not finite
    long evaluations = 0;
};

// Integration of a nonnegative-or-signed integrand over (a, b) where the
// integrand may blow up at the borders (including +-inf), with divergence
// detection: truncation radii double (resp. border gaps halve) and the
// partial integrals must Cauchy-converge; relative growth > div_threshold
// over four consecutive doublings declares the integral infinite.
ImproperResult integrate_improper(const Fn& f, double a, double b,
                                  const Options& opts = {},
                                  double div_threshold = 1e-3);

} // namespace gtdlab::quad
