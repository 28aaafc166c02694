#pragma once

#include <utility>

#include "gtdlab/numeric.hpp"

namespace gtdlab::gtf {

// Parameter pair (v, w) of a generalized trigonometric family.
// v is the outer exponent (nonzero real), w the inner one (positive real).
struct TrigParams {
    double v;
    double w;

    TrigParams(double v_, double w_);

    // duality partner r: 1/v + 1/r = 1 + 1/w
    double dual() const;
};

// Half period: lim_{y->1} arcsin_vw(y) = (1/w) B(1 - 1/v, 1/w) for v outside
// [0, 1]; +inf for v in (0, 1].
ExtendedReal half_pi(const TrigParams& tp);

// Full generalized pi constant, twice the half period.
ExtendedReal pi_vw(const TrigParams& tp);

// arcsin_vw(y) = int_0^y (1 - |t|^w)^(-1/v) dt, |y| < 1 (|y| = 1 allowed when
// the half period is finite).
double arcsin_vw(const TrigParams& tp, double y);

// arsinh_vw(y) = int_0^y (1 + |t|^w)^(-1/v) dt, odd and strictly increasing.
double arsinh_vw(const TrigParams& tp, double y);

// sin/cos pair at x, periodized; cos carries the branch sign.
struct SinCos {
    double s;
    double c;
};
SinCos sincos_vw(const TrigParams& tp, double x);
double sin_vw(const TrigParams& tp, double x);
double cos_vw(const TrigParams& tp, double x);

// hyperbolic pair; x must lie in (-half_pi(r,w), half_pi(r,w)) with r the
// duality parameter. cosh is always positive.
struct SinhCosh {
    double sh;
    double ch;
};
SinhCosh sinhcosh_vw(const TrigParams& tp, double x);
double sinh_vw(const TrigParams& tp, double x);
double cosh_vw(const TrigParams& tp, double x);

// Residuals of the two duality relations at x (w > 1 required):
//   sinh_vw(x) - sin_rw(x)/cos_rw(x)^{r/w}   and   cosh_vw(x) - cos_rw(x)^{-r/v}
std::pair<double, double> duality_check(const TrigParams& tp, double x);

} // namespace gtdlab::gtf
