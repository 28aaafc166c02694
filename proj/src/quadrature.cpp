#include "gtdlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "gtdlab/errors.hpp"

namespace gtdlab::quad {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// Positive abscissae; odd entries carry the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double integral;
    double error;
    bool finite;
};

Panel panel(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        fv[i] = f(c - dx);
        fv[14 - i] = f(c + dx);
    }

    double k15 = kWgk[7] * fv[7];
    double g7 = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        k15 += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) g7 += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    k15 *= h;
    g7 *= h;

    double err = std::fabs(k15 - g7);
    const double sharpened = 200.0 * err * std::sqrt(std::max(err, 0.0));
    if (sharpened > 0.0 && sharpened < err) err = sharpened;
    return {k15, err, std::isfinite(k15)};
}

void adapt(const Fn& f, double a, double b, int depth, const Options& opts,
           double budget, Result& out) {
    if (out.evaluations > opts.max_evaluations) {
        out.converged = false;
        return;
    }
    Panel p = panel(f, a, b);
    out.evaluations += 15;
    if (!p.finite) {
        // a non-finite sample; isolate it by splitting (GK never samples
        // segment endpoints, so one split pushes it onto a boundary)
        if (depth < opts.max_depth) {
            const double m = 0.5 * (a + b);
            adapt(f, a, m, depth + 1, opts, 0.5 * budget, out);
            adapt(f, m, b, depth + 1, opts, 0.5 * budget, out);
        } else {
            out.converged = false;
            out.error += kInf;
        }
        return;
    }
    if (p.error <= budget || depth >= opts.max_depth) {
        if (p.error > budget) out.converged = false;
        out.value += p.integral;
        out.error += p.error;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, depth + 1, opts, 0.5 * budget, out);
    adapt(f, m, b, depth + 1, opts, 0.5 * budget, out);
}

} // namespace

Result gk15_panel(const Fn& f, double a, double b) {
    Panel p = panel(f, a, b);
    return {p.integral, p.error, 15, p.finite};
}

Result integrate_finite(const Fn& f, double a, double b, const Options& opts) {
    if (a == b) return {};
    if (a > b) {
        Result r = integrate_finite(f, b, a, opts);
        r.value = -r.value;
        return r;
    }
    Panel probe = panel(f, a, b);
    const double scale = probe.finite ? std::fabs(probe.integral) : 0.0;
    const double budget = std::max(opts.abs_tol, opts.rel_tol * scale);
    Result out;
    adapt(f, a, b, 0, opts, budget, out);
    out.evaluations += 15;
    return out;
}

Result integrate(const Fn& f, const std::vector<double>& points, const Options& opts) {
    if (points.size() < 2) throw ParameterError("quad::integrate: need at least two breakpoints");
    Result total;
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const double a = points[i];
        const double b = points[i + 1];
        if (a == b) continue;
        if (std::isfinite(a) && std::isfinite(b)) {
            total += integrate_finite(f, a, b, opts);
        } else {
            // x = tan(t) maps the infinite end(s) to a finite t-interval
            const double half = std::asin(1.0);
            const double ta = std::isfinite(a) ? std::atan(a) : -half;
            const double tb = std::isfinite(b) ? std::atan(b) : half;
            auto g = [&f](double t) {
                const double c = std::cos(t);
                const double v = f(std::tan(t));
                return v == 0.0 ? 0.0 : v / (c * c);
            };
            total += integrate_finite(g, ta, tb, opts);
        }
    }
    return total;
}

Result integrate(const Fn& f, double a, double b, const Options& opts) {
    std::vector<double> pts{a};
    if (a < 0.0 && b > 0.0) pts.push_back(0.0);
    pts.push_back(b);
    return integrate(f, pts, opts);
}

namespace {

// One truncation ladder marching from `from` toward the border `border`
// (which may be +-inf). Dyadic steps: radius doubling toward an infinite
// border, gap halving toward a finite one. Geometric extrapolation closes
// power-law tails early; persistent non-shrinking significant increments
// declare divergence.
struct Ladder {
    double sum = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool finite = true;
    bool converged = true;
    std::string diagnostic;
};

Ladder run_ladder(const Fn& f, double from, double border, const Options& opts,
                  double div_threshold, double external_scale) {
    Ladder out;
    const bool inf_end = !std::isfinite(border);
    const double dir = (border > from) ? 1.0 : -1.0;

    double inner = from;
    double prev_inc = 0.0;
    double ratio_hist[3] = {-1.0, -1.0, -1.0};
    int quiet = 0;
    int loud = 0;

    const int max_steps = 160;
    for (int k = 0; k < max_steps; ++k) {
        double outer;
        if (inf_end) {
            outer = dir * std::max(2.0, 2.0 * std::fabs(inner));
        } else {
            outer = border - 0.5 * (border - inner);
            if (outer == inner || outer == border) { // gap below representable resolution
                return out;
            }
        }
        Result r = (dir > 0) ? integrate(f, {inner, outer}, opts)
                             : integrate(f, {outer, inner}, opts);
        double inc = (dir > 0) ? r.value : r.value;
        out.evaluations += r.evaluations;
        out.error += r.error;
        out.sum += inc;

        const double scale = std::max({external_scale, std::fabs(out.sum), opts.abs_tol});
        const double mag = std::fabs(inc);

        if (mag <= std::max(opts.abs_tol, 30.0 * opts.rel_tol * scale)) {
            if (++quiet >= 2) return out;
        } else {
            quiet = 0;
        }

        double ratio = (prev_inc != 0.0) ? mag / std::fabs(prev_inc) : -1.0;
        ratio_hist[k % 3] = ratio;

        // geometric tail: three agreeing contraction ratios close the tail
        if (k >= 6 && ratio > 0.0 && ratio < 0.97) {
            const double r0 = ratio_hist[0], r1 = ratio_hist[1], r2 = ratio_hist[2];
            if (r0 > 0 && r1 > 0 && r2 > 0 &&
                std::fabs(r0 - r1) < 0.02 && std::fabs(r1 - r2) < 0.02) {
                const double tail = inc * ratio / (1.0 - ratio);
                out.sum += tail;
                out.error += std::fabs(tail) * 0.05 + opts.abs_tol;
                return out;
            }
        }

        // divergence: significant, non-shrinking increments past the warm-up
        if (mag > div_threshold * scale && ratio >= 0.97) {
            ++loud;
            if (loud >= 4 && k >= 24) {
                out.finite = false;
                out.sum = (out.sum >= 0.0) ? kInf : -kInf;
                out.diagnostic = "partial integrals grow without Cauchy convergence over 4 doublings";
                return out;
            }
        } else {
            loud = 0;
        }

        prev_inc = inc;
        inner = outer;
    }
    out.converged = false;
    out.diagnostic = "truncation ladder exhausted before convergence";
    return out;
}

} // namespace

ImproperResult integrate_improper(const Fn& f, double a, double b,
                                  const Options& opts, double div_threshold) {
    ImproperResult out;
    if (a >= b) return out;

    // Interior anchors: the core is integrated once, the ladders cover
    // (a, lo] and [hi, b) marching toward the (possibly singular) borders.
    double lo, hi;
    if (!std::isfinite(a) && !std::isfinite(b)) {
        lo = -1.0;
        hi = 1.0;
    } else if (!std::isfinite(b)) {
        lo = hi = a + 1.0;
    } else if (!std::isfinite(a)) {
        lo = hi = b - 1.0;
    } else {
        const double w = b - a;
        lo = a + 0.25 * w;
        hi = b - 0.25 * w;
    }

    if (hi > lo) {
        Result core = integrate(f, lo, hi, opts);
        out.evaluations = core.evaluations;
        out.error = core.error;
        out.value = core.value;
    }
    const double scale0 = std::fabs(out.value);

    for (bool upper : {true, false}) {
        const double from = upper ? hi : lo;
        const double border = upper ? b : a;
        if (from == border) continue;
        Ladder l = run_ladder(f, from, border, opts, div_threshold, scale0);
        out.evaluations += l.evaluations;
        out.error += l.error;
        if (!l.finite) {
            out.finite = false;
            out.diagnostic = (upper ? "upper end: " : "lower end: ") + l.diagnostic;
            out.value = kInf;
            return out;
        }
        if (!l.converged && out.diagnostic.empty())
            out.diagnostic = (upper ? "upper end: " : "lower end: ") + l.diagnostic;
        out.value += l.sum;
    }
    return out;
}

} // namespace gtdlab::quad
