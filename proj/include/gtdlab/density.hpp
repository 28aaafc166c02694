#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "gtdlab/numeric.hpp"

namespace gtdlab {

struct GridDensity;

// Stretched Gaussian parameters (p, lambda) with Holder conjugate p* > 0.
struct GaussParams {
    double p;
    double lambda;

    GaussParams(double p_, double lambda_);
    double p_star() const { return holder_conjugate(p); }
};

// Minimizer family membership of a density: rho_{p,beta,lambda} scaled by
// (.)_(scale). Lets transforms route through the closed-form relations.
struct MinimizerId {
    double p;
    double beta;
    double lambda;
    double scale = 1.0;
};

// Univariate probability density: pointwise evaluation plus the metadata the
// functionals need. pdf is 0 outside the support; pdf_deriv/cdf are present
// for the closed-form families and for grid densities.
struct Density {
    std::string label;
    Interval support;
    std::function<double(double)> pdf;
    std::function<double(double)> pdf_deriv;     // may be empty
    std::function<double(double)> cdf;           // may be empty
    // power decay |x|^-eta; kInf = faster than any power (or compact); nullopt = unknown
    std::optional<ExtendedReal> tail_exponent = kInf;
    bool bounded = true;
    std::optional<MinimizerId> family;
    std::shared_ptr<const GridDensity> grid;     // set for numerically transformed densities

    bool has_deriv() const { return static_cast<bool>(pdf_deriv); }
    bool has_cdf() const { return static_cast<bool>(cdf); }
};

// Parameters (p, beta, lambda) of a generalized trigonometric density,
// with the derived quantities of its definition.
struct GtdParams {
    double p;
    double beta;
    double lambda;

    // derived, filled by the constructor
    double p_star;
    double abar;        // 1 + beta - lambda
    double lambda0;     // beta / abar, parent stretched-Gaussian order
    double kappa;       // |.|^(1/p*) argument scale
    double norm;        // a_{p,beta,lambda} = a_{p,lambda0}
    double nu;          // support-dichotomy trig index
    ExtendedReal support_radius;
    ExtendedReal eta;   // power-tail exponent, kInf when lighter than power
    double gamma_c;     // critical cumulative order
    bool is_bounded;

    GtdParams(double p_, double beta_, double lambda_);
};

// a_{p,lambda} normalization constant of the stretched Gaussian.
double stretched_gaussian_norm(double p, double lambda);

// The stretched Gaussian g_{p,lambda}.
Density stretched_gaussian(const GaussParams& params);

// The generalized trigonometric density omega_{p,beta,lambda} (lambda != 1, != beta).
Density gtd(const GtdParams& params);

// The lambda = 1 minimizer family (beta != 1).
Density g_frak(double p, double beta);

// Dispatch: beta = lambda -> stretched Gaussian; lambda = 1 -> g_frak; else GTD.
Density minimizer(double p, double beta, double lambda);

ExtendedReal tail_exponent(const GtdParams& params);
double critical_gamma(const GtdParams& params);

// mu_{q,gamma}[rho_{p,beta,lambda}] < inf per the finiteness criterion.
bool moment_finiteness(const GtdParams& params, double q, double gamma);

// Reference densities used across tests, checks, and the CLI.
Density uniform01();
Density exponential_density(double rate = 1.0);
Density cauchy_density();

// f_(kappa)(x) = kappa f(kappa x), kappa > 0.
Density scale_density(const Density& f, double kappa);
// f_[a](x) = f(x - a)
Density shift_density(const Density& f, double a);

} // namespace gtdlab
