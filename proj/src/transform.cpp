#include "gtdlab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gtdlab/errors.hpp"
#include "gtdlab/interp.hpp"
#include "gtdlab/quadrature.hpp"
#include "gtdlab/roots.hpp"

namespace gtdlab {

namespace {

const quad::Options kMapQuad{1e-13, 1e-12, 48, 2'000'000};

// Quantile of f through its cdf (or a numeric fallback), by bisection on a
// bracket expanded from the support interior.
double quantile(const Density& f, double u) {
    if (!f.has_cdf()) throw NumericError("quantile: density has no cdf");
    double lo = std::isfinite(f.support.lo) ? f.support.lo : -1.0;
    double hi = std::isfinite(f.support.hi) ? f.support.hi : 1.0;
    if (!std::isfinite(f.support.lo))
        while (f.cdf(lo) > u) lo = lo < -1e280 ? -kInf : lo * 2.0 - 1.0;
    if (!std::isfinite(f.support.hi))
        while (f.cdf(hi) < u) hi = hi > 1e280 ? kInf : hi * 2.0 + 1.0;
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw NumericError("quantile: bracket expansion failed");
    return roots::invert_increasing([&f](double x) { return f.cdf(x); }, u, lo, hi, nullptr,
                                    {1e-13, 1e-12, 300});
}

// Truncation window containing all but tail_mass of f per side.
std::pair<double, double> mass_window(const Density& f, double tail_mass) {
    if (f.has_cdf()) {
        double lo = quantile(f, tail_mass);
        double hi = quantile(f, 1.0 - tail_mass);
        return {lo, hi};
    }
    // fall back to a pdf-threshold sweep
    double lo = std::isfinite(f.support.lo) ? f.support.lo : -1.0;
    double hi = std::isfinite(f.support.hi) ? f.support.hi : 1.0;
    if (!std::isfinite(f.support.lo))
        while (f.pdf(lo) > 1e-14 && lo > -1e12) lo *= 2.0;
    if (!std::isfinite(f.support.hi))
        while (f.pdf(hi) > 1e-14 && hi < 1e12) hi *= 2.0;
    return {lo, hi};
}

Density uniform_on_unit_interval() {
    Density d;
    d.label = "uniform:0,1";
    d.support = Interval{0.0, 1.0};
    d.pdf = [](double x) { return (x > 0.0 && x < 1.0) ? 1.0 : 0.0; };
    d.pdf_deriv = [](double) { return 0.0; };
    d.cdf = [](double x) { return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x); };
    d.tail_exponent = kInf;
    return d;
}

// Tail metadata of D_alpha f from the stretching lemma, when derivable.
std::optional<ExtendedReal> transformed_tail(const std::optional<ExtendedReal>& eta_in,
                                             double alpha) {
    if (!eta_in) return std::nullopt;
    const double eta = *eta_in;
    if (std::isfinite(eta)) {
        const double alpha_c = 1.0 - 1.0 / eta;
        if (alpha < alpha_c) return kInf;  // compact
        if (alpha == alpha_c) return kInf; // exponential decay
        return eta * alpha / (1.0 + eta * (alpha - 1.0));
    }
    // exponential-or-lighter input
    if (alpha <= 1.0) return kInf;
    return std::nullopt;  // depends on the sub-power structure of the tail
}

Density numeric_escort(const Density& f, double alpha, const EscortOptions& opts) {
    if (alpha < 0.0 && !opts.allow_unbounded)
        throw DomainError(
            "differential_escort: alpha < 0 diverges at the support borders; "
            "set allow_unbounded to proceed");
    if (alpha >= 0.0 && !f.bounded)
        throw DomainError("differential_escort: input density must be bounded for alpha >= 0");

    auto [A, B] = mass_window(f, opts.tail_mass);

    // node set: quantile-spaced (mass resolution), atan-uniform (scale
    // resolution), and geometric refinement toward finite borders
    std::set<double> nodes;
    nodes.insert(0.0);
    nodes.insert(A);
    nodes.insert(B);
    const int n_quant = opts.grid_nodes / 2;
    if (f.has_cdf()) {
        const double ua = f.cdf(A), ub = f.cdf(B);
        for (int i = 1; i < n_quant; ++i) {
            const double u = ua + (ub - ua) * i / static_cast<double>(n_quant);
            nodes.insert(quantile(f, u));
        }
    }
    const int n_atan = opts.grid_nodes / 2;
    const double ta = std::atan(A), tb = std::atan(B);
    for (int i = 1; i < n_atan; ++i)
        nodes.insert(std::tan(ta + (tb - ta) * i / static_cast<double>(n_atan)));
    for (int side = 0; side < 2; ++side) {
        const double border = side == 0 ? f.support.lo : f.support.hi;
        if (!std::isfinite(border)) continue;
        const double anchor = side == 0 ? A : B;
        double gap = std::fabs(border - anchor);
        for (int j = 0; j < 48 && gap > 1e-13 * std::max(1.0, std::fabs(border)); ++j) {
            gap *= 0.5;
            nodes.insert(border + (side == 0 ? gap : -gap));
        }
    }

    std::vector<double> xs(nodes.begin(), nodes.end());
    xs.erase(std::remove_if(xs.begin(), xs.end(),
                            [&](double x) { return x < A || x > B; }),
             xs.end());

    // y(x) by cumulative quadrature of f^(1-alpha) between nodes, outward from 0
    auto weight = [&f, alpha](double t) {
        const double v = f.pdf(t);
        return v > 0.0 ? std::pow(v, 1.0 - alpha) : 0.0;
    };
    const size_t n = xs.size();
    if (n < 8) throw NumericError("differential_escort: degenerate node set");
    std::vector<double> ys(n, 0.0);
    size_t ia = static_cast<size_t>(
        std::lower_bound(xs.begin(), xs.end(), 0.0) - xs.begin());
    if (ia >= n) ia = n - 1;
    ys[ia] = quad::integrate_finite(weight, 0.0, xs[ia], kMapQuad).value;
    for (size_t i = ia; i + 1 < n; ++i)
        ys[i + 1] = ys[i] + quad::integrate_finite(weight, xs[i], xs[i + 1], kMapQuad).value;
    for (size_t i = ia; i-- > 0;)
        ys[i] = ys[i + 1] - quad::integrate_finite(weight, xs[i], xs[i + 1], kMapQuad).value;

    std::vector<double> fv(n);
    for (size_t i = 0; i < n; ++i) {
        const double val = f.pdf(xs[i]);
        const bool interior = xs[i] > f.support.lo && xs[i] < f.support.hi;
        if (val <= 0.0 && interior && xs[i] > A && xs[i] < B)
            throw DomainError("differential_escort: density vanishes at an interior point; "
                              "the change of variables is not invertible");
        fv[i] = val > 0.0 ? std::min(std::pow(val, alpha), 1e100) : 0.0;
    }

    // drop nodes that no longer increase y (flat spots at the very borders)
    std::vector<double> gx, gy, gf;
    gx.reserve(n); gy.reserve(n); gf.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!gy.empty() && !(ys[i] > gy.back() + 1e-300)) continue;
        gx.push_back(xs[i]);
        gy.push_back(ys[i]);
        gf.push_back(fv[i]);
    }
    if (gx.size() < 8) throw NumericError("differential_escort: degenerate grid");

    auto table = std::make_shared<GridDensity>();
    table->xs = gx;
    table->ys = gy;
    table->fvals = gf;
    table->alpha = alpha;
    table->source_label = f.label;

    // transformed support: grid ends plus the residual weighted tails
    double y_lo = gy.front(), y_hi = gy.back();
    {
        auto res_hi = quad::integrate_improper(weight, B, f.support.hi, kMapQuad);
        auto res_lo = quad::integrate_improper(weight, f.support.lo, A, kMapQuad);
        y_hi = res_hi.finite ? y_hi + res_hi.value : kInf;
        y_lo = res_lo.finite ? y_lo - res_lo.value : -kInf;
    }

    auto x_of_y = std::make_shared<Pchip>(gy, gx);
    Density out;
    out.label = "descort(" + std::to_string(alpha) + ")[" + f.label + "]";
    out.support = Interval{y_lo, y_hi};
    out.grid = table;
    out.tail_exponent = transformed_tail(f.tail_exponent, alpha);
    out.bounded = f.bounded && alpha >= 0.0;
    auto base = f;
    const double ylo_g = gy.front(), yhi_g = gy.back();
    out.pdf = [base, alpha, x_of_y, ylo_g, yhi_g](double y) {
        if (y <= ylo_g || y >= yhi_g) return 0.0;
        const double v = base.pdf((*x_of_y)(y));
        return v > 0.0 ? std::pow(v, alpha) : 0.0;
    };
    if (f.has_deriv()) {
        out.pdf_deriv = [base, alpha, x_of_y, ylo_g, yhi_g](double y) {
            if (y <= ylo_g || y >= yhi_g) return 0.0;
            const double x = (*x_of_y)(y);
            const double v = base.pdf(x);
            if (v <= 0.0) return 0.0;
            return alpha * std::pow(v, 2.0 * (alpha - 1.0)) * base.pdf_deriv(x);
        };
    } else {
        auto interp_f = std::make_shared<Pchip>(gy, gf);
        out.pdf_deriv = [interp_f, ylo_g, yhi_g](double y) {
            if (y <= ylo_g || y >= yhi_g) return 0.0;
            return interp_f->derivative(y);
        };
    }
    if (f.has_cdf()) {
        out.cdf = [base, x_of_y, ylo_g, yhi_g](double y) {
            if (y <= ylo_g) return 0.0;
            if (y >= yhi_g) return 1.0;
            return base.cdf((*x_of_y)(y));
        };
    }
    return out;
}

} // namespace

std::shared_ptr<const GridDensity> grid_of(const Density& d) { return d.grid; }

Density differential_escort(const Density& f, double alpha, const EscortOptions& opts) {
    if (alpha == 1.0) return f;
    if (alpha == 0.0) return uniform_on_unit_interval();
    if (alpha < 0.0 && !opts.allow_unbounded)
        throw DomainError(
            "differential_escort: alpha < 0 diverges at the support borders; "
            "set allow_unbounded to proceed");

    if (f.family && !opts.force_numeric) {
        // D_alpha rho_{p,b,l} = (rho_{p, b/a, 1+(l-1)/a})_(a_{p,b,l}^{alpha-1});
        // a scaled input contributes scale^alpha on top.
        const MinimizerId id = *f.family;
        const double beta2 = id.beta / alpha;
        const double lambda2 = 1.0 + (id.lambda - 1.0) / alpha;
        const double a_norm = stretched_gaussian_norm(
            id.p, id.beta / (1.0 + id.beta - id.lambda));
        const double scale = std::pow(a_norm, alpha - 1.0) * std::pow(id.scale, alpha);
        Density out = scale_density(minimizer(id.p, beta2, lambda2), scale);
        out.label = "descort(" + std::to_string(alpha) + ")[" + f.label + "]";
        return out;
    }
    return numeric_escort(f, alpha, opts);
}

Density usual_escort(const Density& f, double alpha) {
    if (alpha == 1.0) return f;
    auto integrand = [&f, alpha](double x) {
        const double v = f.pdf(x);
        return v > 0.0 ? std::pow(v, alpha) : 0.0;
    };
    auto z = quad::integrate_improper(integrand, f.support.lo, f.support.hi,
                                      quad::Options{1e-12, 1e-11});
    if (!z.finite)
        throw DomainError("usual_escort: int f^alpha diverges (" + z.diagnostic + ")");
    const double Z = z.value;
    if (!(Z > 0.0) || !std::isfinite(Z))
        throw NumericError("usual_escort: degenerate normalizer");

    Density out;
    out.label = "escort(" + std::to_string(alpha) + ")[" + f.label + "]";
    out.support = f.support;
    auto base = f;
    out.pdf = [base, alpha, Z](double x) {
        const double v = base.pdf(x);
        return v > 0.0 ? std::pow(v, alpha) / Z : 0.0;
    };
    if (f.has_deriv()) {
        out.pdf_deriv = [base, alpha, Z](double x) {
            const double v = base.pdf(x);
            if (v <= 0.0) return 0.0;
            return alpha * std::pow(v, alpha - 1.0) * base.pdf_deriv(x) / Z;
        };
    }
    if (f.tail_exponent) {
        out.tail_exponent = std::isfinite(*f.tail_exponent) ? alpha * (*f.tail_exponent) : kInf;
    }
    out.bounded = f.bounded && alpha > 0.0;
    return out;
}

Density escort_stretched_gaussian_closed_form(const GaussParams& params, double alpha) {
    Density g = stretched_gaussian(params);
    if (alpha == 1.0) return g;
    if (std::fabs(params.lambda - 1.0) < 1e-8 && alpha != 1.0)
        throw ParameterError("escort_stretched_gaussian_closed_form: lambda = 1 excluded");
    EscortOptions opts;
    opts.allow_unbounded = alpha < 0.0;
    Density out = differential_escort(g, alpha, opts);
    out.label = "descort-closed(" + std::to_string(alpha) + ")[" + g.label + "]";
    return out;
}

Density density_from_table(const std::vector<double>& xs, const std::vector<double>& pdf,
                           const std::string& label) {
    if (xs.size() != pdf.size() || xs.size() < 4)
        throw ParameterError("density_from_table: need matching arrays with >= 4 rows");
    for (double v : pdf)
        if (v < 0.0) throw ParameterError("density_from_table: negative pdf value");
    auto interp = std::make_shared<Pchip>(xs, pdf);
    const double lo = xs.front(), hi = xs.back();
    auto raw = [interp, lo, hi](double x) {
        if (x <= lo || x >= hi) return 0.0;
        return std::max(0.0, (*interp)(x));
    };
    const double mass = quad::integrate(raw, lo, hi, quad::Options{1e-12, 1e-12}).value;
    if (!(mass > 0.0)) throw ParameterError("density_from_table: zero total mass");

    Density d;
    d.label = label;
    d.support = Interval{lo, hi};
    d.pdf = [raw, mass](double x) { return raw(x) / mass; };
    d.pdf_deriv = [interp, mass, lo, hi](double x) {
        if (x <= lo || x >= hi) return 0.0;
        return interp->derivative(x) / mass;
    };
    d.tail_exponent = std::nullopt;
    return d;
}

} // namespace gtdlab
