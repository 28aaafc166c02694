#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gtdlab/density.hpp"

namespace gtdlab {

// Numeric change-of-variables table of a differential-escort transform:
// ys = y(xs) with y(x) = int_0^x f^(1-alpha), fvals = f(xs)^alpha.
struct GridDensity {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> fvals;
    double alpha = 1.0;
    std::string source_label;
};

struct EscortOptions {
    int grid_nodes = 4096;
    double tail_mass = 1e-9;      // truncated mass budget per side
    bool allow_unbounded = false; // required for alpha < 0 (divergent borders)
    bool force_numeric = false;   // skip the closed-form fast path
};

// The alpha-order differential-escort transform D_alpha f. Closed-form route
// when f is a recognized minimizer-family member, numeric grid otherwise.
Density differential_escort(const Density& f, double alpha, const EscortOptions& opts = {});

// The usual escort f^alpha / int f^alpha on the unchanged support.
Density usual_escort(const Density& f, double alpha);

// Closed form of D_alpha g_{p,lambda} (lambda != 1; alpha = 1 returns g itself).
Density escort_stretched_gaussian_closed_form(const GaussParams& params, double alpha);

// Access the grid table behind a numerically transformed density (null for
// closed-form densities).
std::shared_ptr<const GridDensity> grid_of(const Density& d);

// Build a density from a tabulated grid (x, pdf), pchip-interpolated,
// renormalized to unit mass.
Density density_from_table(const std::vector<double>& xs, const std::vector<double>& pdf,
                           const std::string& label);

} // namespace gtdlab
