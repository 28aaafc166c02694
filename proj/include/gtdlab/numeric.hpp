#pragma once

#include <cmath>
#include <limits>

namespace gtdlab {

// Extended real line: IEEE doubles already order +-inf correctly, so quantities
// that may be infinite (half-periods, support radii, tail exponents, divergent
// functionals) are plain doubles holding kInf where the paper writes infinity.
using ExtendedReal = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline bool is_finite(double x) { return std::isfinite(x); }

// Closed-open convention does not matter for the measures used here; an
// interval is the open segment (lo, hi) with lo < hi, either end possibly infinite.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double x) const { return x > lo && x < hi; }
    double length() const { return hi - lo; }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool is_real_line() const { return lo == -kInf && hi == kInf; }
};

inline Interval real_line() { return Interval{-kInf, kInf}; }
inline Interval half_line() { return Interval{0.0, kInf}; }
inline Interval symmetric_interval(double radius) { return Interval{-radius, radius}; }

inline double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// (x)_+ = max(0, x)
inline double positive_part(double x) { return x > 0 ? x : 0.0; }

// |x|^e with the sign of x, the odd power extension used throughout
inline double signed_pow(double x, double e) {
    return sign(x) * std::pow(std::fabs(x), e);
}

// Holder conjugate p* = p/(p-1)
inline double holder_conjugate(double p) { return p / (p - 1.0); }

} // namespace gtdlab
