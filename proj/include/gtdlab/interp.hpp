#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gtdlab/errors.hpp"

namespace gtdlab {

// Monotone piecewise-cubic interpolation (Fritsch-Carlson limited PCHIP).
// Preserves monotonicity of the data, which keeps inverse maps one-to-one.
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        const size_t n = x_.size();
        if (n < 2 || n != y_.size()) throw ParameterError("Pchip: need matching arrays, size >= 2");
        for (size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1])) throw ParameterError("Pchip: abscissae must be strictly increasing");
        d_.resize(n);
        std::vector<double> h(n - 1), s(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            s[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 2) {
            d_[0] = d_[1] = s[0];
        } else {
            for (size_t i = 1; i + 1 < n; ++i) {
                if (s[i - 1] * s[i] <= 0.0) {
                    d_[i] = 0.0;
                } else {
                    const double w1 = 2.0 * h[i] + h[i - 1];
                    const double w2 = h[i] + 2.0 * h[i - 1];
                    d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
                }
            }
            d_[0] = edge_slope(h[0], h[1], s[0], s[1]);
            d_[n - 1] = edge_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
        }
    }

    double operator()(double xq) const {
        const size_t i = segment(xq);
        const double h = x_[i + 1] - x_[i];
        const double t = (xq - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
    }

    double derivative(double xq) const {
        const size_t i = segment(xq);
        const double h = x_[i + 1] - x_[i];
        const double t = (xq - x_[i]) / h;
        const double t2 = t * t;
        const double dh00 = (6 * t2 - 6 * t) / h;
        const double dh10 = 3 * t2 - 4 * t + 1;
        const double dh01 = (-6 * t2 + 6 * t) / h;
        const double dh11 = 3 * t2 - 2 * t;
        return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
    }

    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }
    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }

private:
    static double edge_slope(double h0, double h1, double s0, double s1) {
        double d = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d * s0 <= 0.0) return 0.0;
        if (s0 * s1 <= 0.0 && std::fabs(d) > 3.0 * std::fabs(s0)) return 3.0 * s0;
        return d;
    }

    size_t segment(double xq) const {
        if (xq <= x_.front()) return 0;
        if (xq >= x_.back()) return x_.size() - 2;
        const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
        return static_cast<size_t>(it - x_.begin()) - 1;
    }

    std::vector<double> x_, y_, d_;
};

} // namespace gtdlab
