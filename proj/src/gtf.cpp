#include "gtdlab/gtf.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "gtdlab/errors.hpp"
#include "gtdlab/quadrature.hpp"
#include "gtdlab/roots.hpp"

namespace gtdlab::gtf {

namespace {

const quad::Options kTightQuad{1e-15, 1e-14, 52, 400'000};

double beta_fn(double a, double b) { return boost::math::beta(a, b); }

// unnormalized incomplete beta B(x; a, b)
double ibeta_lower(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return beta_fn(a, b);
    return boost::math::ibeta(a, b, x) * beta_fn(a, b);
}

} // namespace

TrigParams::TrigParams(double v_, double w_) : v(v_), w(w_) {
    if (v == 0.0 || !std::isfinite(v)) throw ParameterError("TrigParams: v must be a nonzero finite real");
    if (!(w > 0.0) || !std::isfinite(w)) throw ParameterError("TrigParams: w must be a positive finite real");
}

double TrigParams::dual() const {
    const double inv = 1.0 + 1.0 / w - 1.0 / v;
    if (inv == 0.0) throw ParameterError("TrigParams::dual: duality parameter undefined (1 + 1/w = 1/v)");
    return 1.0 / inv;
}

ExtendedReal half_pi(const TrigParams& tp) {
    if (tp.v > 0.0 && tp.v <= 1.0) return kInf;
    return (1.0 / tp.w) * beta_fn(1.0 - 1.0 / tp.v, 1.0 / tp.w);
}

ExtendedReal pi_vw(const TrigParams& tp) {
    const double h = half_pi(tp);
    return std::isfinite(h) ? 2.0 * h : kInf;
}

double arcsin_vw(const TrigParams& tp, double y) {
    const double ay = std::fabs(y);
    if (ay > 1.0) throw DomainError("arcsin_vw: |y| > 1");
    if (ay == 0.0) return 0.0;
    if (ay == 1.0) {
        const double h = half_pi(tp);
        if (!std::isfinite(h)) throw DomainError("arcsin_vw: |y| = 1 diverges for v in (0,1]");
        return sign(y) * h;
    }
    const double v = tp.v, w = tp.w;
    if (v > 1.0 || v < 0.0) {
        // substitution u = t^w reduces to an incomplete Beta with positive parameters
        const double val = (1.0 / w) * ibeta_lower(1.0 / w, 1.0 - 1.0 / v, std::pow(ay, w));
        return sign(y) * val;
    }
    // v in (0, 1]: quadrature; integrand grows toward t = y but stays integrable
    auto f = [v, w](double t) { return std::pow(1.0 - std::pow(t, w), -1.0 / v); };
    std::vector<double> pts{0.0};
    if (ay > 0.9375) pts.push_back(0.9375);  // refine the steep approach separately
    pts.push_back(ay);
    return sign(y) * quad::integrate(f, pts, kTightQuad).value;
}

double arsinh_vw(const TrigParams& tp, double y) {
    const double ay = std::fabs(y);
    if (ay == 0.0) return 0.0;
    const double v = tp.v, w = tp.w;
    const double b = 1.0 / v - 1.0 / w;
    if (b > 0.0) {
        // u = t^w/(1+t^w) turns the integral into an incomplete Beta
        const double yw = std::pow(ay, w);
        const double u = yw / (1.0 + yw);
        return sign(y) * (1.0 / w) * ibeta_lower(1.0 / w, b, u);
    }
    auto f = [v, w](double t) { return std::pow(1.0 + std::pow(t, w), -1.0 / v); };
    std::vector<double> pts{0.0};
    for (double s = 1.0; s < ay; s *= 4.0) pts.push_back(s);
    pts.push_back(ay);
    return sign(y) * quad::integrate(f, pts, kTightQuad).value;
}

namespace {

// invert arcsin on [0, 1]: find s with arcsin_vw(s) = t, 0 <= t <= half_pi
double invert_arcsin(const TrigParams& tp, double t, double hp) {
    if (t <= 0.0) return 0.0;
    if (std::isfinite(hp) && t >= hp) return 1.0;
    auto F = [&tp](double s) { return arcsin_vw(tp, s); };
    auto dF = [&tp](double s) {
        const double q = 1.0 - std::pow(s, tp.w);
        return q > 0.0 ? std::pow(q, -1.0 / tp.v) : kInf;
    };
    roots::InvertOptions ro;
    ro.x_tol = 1e-15;
    ro.f_tol = 1e-13;
    return roots::invert_increasing(F, t, 0.0, 1.0, dF, ro);
}

// invert arsinh on [0, inf): find s with arsinh_vw(s) = t, t >= 0
double invert_arsinh(const TrigParams& tp, double t) {
    if (t <= 0.0) return 0.0;
    double hi = 1.0;
    while (arsinh_vw(tp, hi) < t) {
        hi *= 2.0;
        if (hi > 1e300) throw NumericError("sinh_vw: argument beyond the function range");
    }
    auto F = [&tp](double s) { return arsinh_vw(tp, s); };
    auto dF = [&tp](double s) { return std::pow(1.0 + std::pow(s, tp.w), -1.0 / tp.v); };
    roots::InvertOptions ro;
    ro.x_tol = 1e-15;
    ro.f_tol = 1e-13;
    return roots::invert_increasing(F, t, 0.0, hi, dF, ro);
}

} // namespace

SinCos sincos_vw(const TrigParams& tp, double x) {
    const double hp = half_pi(tp);
    double t = x;
    double csign = 1.0;
    if (std::isfinite(hp)) {
        const double period = 4.0 * hp;  // the reflected primary branch tiles with period 2 pi_vw
        t = x - period * std::floor((x + hp) / period);
        if (t > hp) {            // falling half: reflect through pi_vw
            t = 2.0 * hp - t;
            csign = -1.0;
        }
    }
    const double s = sign(t) * invert_arcsin(tp, std::fabs(t), hp);
    const double q = 1.0 - std::pow(std::fabs(s), tp.w);
    const double c = q > 0.0 ? std::pow(q, 1.0 / tp.v) : (tp.v > 0.0 ? 0.0 : kInf);
    return {s, csign * c};
}

double sin_vw(const TrigParams& tp, double x) { return sincos_vw(tp, x).s; }
double cos_vw(const TrigParams& tp, double x) { return sincos_vw(tp, x).c; }

SinhCosh sinhcosh_vw(const TrigParams& tp, double x) {
    const TrigParams dual_tp(tp.dual(), tp.w);
    const double L = half_pi(dual_tp);
    if (std::isfinite(L) && std::fabs(x) >= L)
        throw DomainError("sinh_vw: |x| outside (-pi_{r,w}/2, pi_{r,w}/2)");
    const double sh = sign(x) * invert_arsinh(tp, std::fabs(x));
    const double ch = std::pow(1.0 + std::pow(std::fabs(sh), tp.w), 1.0 / tp.v);
    return {sh, ch};
}

double sinh_vw(const TrigParams& tp, double x) { return sinhcosh_vw(tp, x).sh; }
double cosh_vw(const TrigParams& tp, double x) { return sinhcosh_vw(tp, x).ch; }

std::pair<double, double> duality_check(const TrigParams& tp, double x) {
    if (!(tp.w > 1.0))
        throw ParameterError("duality_check: the duality relations require w > 1");
    const double r = tp.dual();
    const TrigParams rp(r, tp.w);
    const SinhCosh h = sinhcosh_vw(tp, x);
    const SinCos tr = sincos_vw(rp, x);
    const double res1 = h.sh - tr.s / std::pow(tr.c, r / tp.w);
    const double res2 = h.ch - std::pow(tr.c, -r / tp.v);
    return {res1, res2};
}

} // namespace gtdlab::gtf
