#include "gtdlab/density.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gtdlab/errors.hpp"
#include "gtdlab/gtf.hpp"
#include "gtdlab/quadrature.hpp"
#include "gtdlab/roots.hpp"

namespace gtdlab {

namespace {

std::string fmt_params(std::initializer_list<double> xs) {
    std::ostringstream os;
    bool first = true;
    for (double x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    return os.str();
}

constexpr double kLimitTol = 1e-8;   // |lambda-1|, |beta-lambda| collapse thresholds

} // namespace

GaussParams::GaussParams(double p_, double lambda_) : p(p_), lambda(lambda_) {
    if (p == 1.0)
        throw ParameterError("GaussParams: p = 1 (p* = inf) is an analytic limit, not computable here");
    const double ps = holder_conjugate(p);
    if (!(ps > 0.0) || !std::isfinite(ps))
        throw ParameterError("GaussParams: requires Holder conjugate p* = p/(p-1) > 0");
    if (!(lambda > 1.0 - ps))
        throw ParameterError("GaussParams: integrability requires lambda > 1 - p*");
}

double stretched_gaussian_norm(double p, double lambda) {
    const double ps = holder_conjugate(p);
    if (std::fabs(lambda - 1.0) < kLimitTol)
        return ps / (2.0 * std::tgamma(1.0 / ps));
    const double ind = (1.0 - lambda) >= 0.0 ? 1.0 : 0.0;
    const double b = lambda / std::fabs(1.0 - lambda) + ind / p;
    return ps * std::pow(std::fabs(1.0 - lambda), 1.0 / ps) /
           (2.0 * boost::math::beta(1.0 / ps, b));
}

Density stretched_gaussian(const GaussParams& params) {
    const double p = params.p;
    const double lambda = params.lambda;
    const double ps = params.p_star();
    const double a = stretched_gaussian_norm(p, lambda);

    Density d;
    d.label = "stretched-gaussian:" + fmt_params({p, lambda});
    d.family = MinimizerId{p, lambda, lambda, 1.0};

    if (std::fabs(lambda - 1.0) < kLimitTol) {
        d.support = real_line();
        d.tail_exponent = kInf;
        d.pdf = [a, ps](double x) { return a * std::exp(-std::pow(std::fabs(x), ps)); };
        d.pdf_deriv = [a, ps](double x) {
            const double ax = std::fabs(x);
            return -a * ps * std::pow(ax, ps - 1.0) * sign(x) * std::exp(-std::pow(ax, ps));
        };
        d.cdf = [a, ps](double x) {
            const double tail = (a / ps) * std::tgamma(1.0 / ps) *
                                boost::math::gamma_p(1.0 / ps, std::pow(std::fabs(x), ps));
            return 0.5 + sign(x) * tail;
        };
        return d;
    }

    if (lambda > 1.0) {
        // compact support; the density formula vanishes at (lambda-1)^(-1/p*)
        const double R = std::pow(lambda - 1.0, -1.0 / ps);
        d.support = symmetric_interval(R);
        d.tail_exponent = kInf;
        d.pdf = [a, ps, lambda, R](double x) {
            if (std::fabs(x) >= R) return 0.0;
            return a * std::pow(positive_part(1.0 - (lambda - 1.0) * std::pow(std::fabs(x), ps)),
                                1.0 / (lambda - 1.0));
        };
    } else {
        d.support = real_line();
        d.tail_exponent = ps / (1.0 - lambda);
        d.pdf = [a, ps, lambda](double x) {
            return a * std::pow(1.0 + (1.0 - lambda) * std::pow(std::fabs(x), ps),
                                -1.0 / (1.0 - lambda));
        };
    }
    d.pdf_deriv = [d, a, ps, lambda](double x) {
        const double f = d.pdf(x);
        if (f == 0.0) return 0.0;
        const double E = f / a;  // deformed exponential factor
        return -a * ps * std::pow(std::fabs(x), ps - 1.0) * sign(x) * std::pow(E, 2.0 - lambda);
    };
    const double scale = std::pow(std::fabs(1.0 - lambda), 1.0 / ps);
    if (lambda > 1.0) {
        const gtf::TrigParams tp(1.0 - lambda, ps);
        d.cdf = [a, scale, tp](double x) {
            return 0.5 + (a / scale) * gtf::arcsin_vw(tp, std::max(-1.0, std::min(1.0, scale * x)));
        };
    } else {
        const gtf::TrigParams tp(1.0 - lambda, ps);
        d.cdf = [a, scale, tp](double x) {
            return 0.5 + (a / scale) * gtf::arsinh_vw(tp, scale * x);
        };
    }
    return d;
}

GtdParams::GtdParams(double p_, double beta_, double lambda_)
    : p(p_), beta(beta_), lambda(lambda_) {
    if (p == 1.0)
        throw ParameterError("GtdParams: p = 1 (p* = inf) is an analytic limit, not computable here");
    p_star = holder_conjugate(p);
    if (!(p_star > 0.0) || !std::isfinite(p_star))
        throw ParameterError("GtdParams: requires p* = p/(p-1) > 0");
    if (std::fabs(lambda - 1.0) < kLimitTol)
        throw DispatchError("GtdParams: lambda = 1 belongs to the g_frak family");
    if (std::fabs(lambda - beta) < kLimitTol)
        throw DispatchError("GtdParams: beta = lambda belongs to the stretched-Gaussian family");
    abar = 1.0 + beta - lambda;
    if (abar == 0.0)
        throw ParameterError("GtdParams: requires 1 + beta - lambda != 0");
    if (sign(abar) != sign((1.0 - lambda) / p + beta))
        throw ParameterError(
            "GtdParams: requires sign(1+beta-lambda) = sign((1-lambda)/p + beta)");
    lambda0 = beta / abar;
    kappa = std::pow(std::fabs((lambda - 1.0) / abar), 1.0 / p_star);
    norm = stretched_gaussian_norm(p, lambda0);
    const double ind = ((1.0 - lambda) / abar) >= 0.0 ? 1.0 : 0.0;
    const double inv_nu =
        ind * (p_star + 1.0) / p_star + (lambda - beta) / std::fabs(1.0 - lambda) * sign(abar);
    nu = 1.0 / inv_nu;
    {
        const double hp = gtf::half_pi(gtf::TrigParams(nu, p_star));
        support_radius = std::isfinite(hp) ? hp / kappa : kInf;
    }
    eta = tail_exponent(*this);
    gamma_c = critical_gamma(*this);
    is_bounded = beta > std::max(lambda - 1.0, (lambda - 1.0) / p);
}

ExtendedReal tail_exponent(const GtdParams& params) {
    if (params.lambda < 1.0) {
        const double den = params.p_star * (params.lambda - params.beta) + 1.0 - params.lambda;
        return den > 0.0 ? params.p_star / den : kInf;
    }
    // lambda > 1: the two parent parameters drop out
    return params.beta < 1.0 ? 1.0 / (1.0 - params.beta) : kInf;
}

double critical_gamma(const GtdParams& params) {
    return params.beta + positive_part(1.0 - params.lambda) / params.p;
}

bool moment_finiteness(const GtdParams& params, double q, double gamma) {
    if (!(q > 0.0)) throw ParameterError("moment_finiteness: q must be positive");
    if (gamma <= params.gamma_c) return true;
    const double plus = positive_part(1.0 - params.lambda);
    const double threshold = (params.p * params.beta + plus) /
                             (params.p * (gamma - params.beta) - plus);
    return q < threshold;
}

Density gtd(const GtdParams& params) {
    const double p = params.p;
    const double beta = params.beta;
    const double lambda = params.lambda;
    const double ps = params.p_star;
    const double kappa = params.kappa;
    const double a = params.norm;
    const double expo = 1.0 / (lambda - beta);
    const double v = (1.0 - lambda) / (beta - lambda);
    const bool hyperbolic = params.lambda0 < 1.0;  // parent below the Gaussian order
    const gtf::TrigParams tp(v, ps);
    const double R = params.support_radius;

    Density d;
    d.label = "gtd:" + fmt_params({p, beta, lambda});
    d.family = MinimizerId{p, beta, lambda, 1.0};
    d.support = std::isfinite(R) ? symmetric_interval(R) : real_line();
    d.tail_exponent = params.eta;
    d.bounded = params.is_bounded;

    if (hyperbolic) {
        d.pdf = [tp, kappa, a, expo, R](double y) {
            if (std::fabs(y) >= R) return 0.0;
            const auto hc = gtf::sinhcosh_vw(tp, kappa * std::fabs(y));
            return a * std::pow(hc.ch, expo);
        };
        d.pdf_deriv = [tp, kappa, a, expo, v, ps, R](double y) {
            if (std::fabs(y) >= R || y == 0.0) return 0.0;
            const auto hc = gtf::sinhcosh_vw(tp, kappa * std::fabs(y));
            const double dch = (ps / v) * std::pow(std::fabs(hc.sh), ps - 1.0) *
                               std::pow(hc.ch, 2.0 - v);
            return sign(y) * a * expo * std::pow(hc.ch, expo - 1.0) * dch * kappa;
        };
    } else {
        d.pdf = [tp, kappa, a, expo, R](double y) {
            if (std::fabs(y) >= R) return 0.0;
            const auto sc = gtf::sincos_vw(tp, kappa * std::fabs(y));
            return a * std::pow(sc.c, expo);
        };
        d.pdf_deriv = [tp, kappa, a, expo, v, ps, R](double y) {
            if (std::fabs(y) >= R || y == 0.0) return 0.0;
            const auto sc = gtf::sincos_vw(tp, kappa * std::fabs(y));
            const double dc = -(ps / v) * std::pow(std::fabs(sc.s), ps - 1.0) *
                              std::pow(sc.c, 2.0 - v);
            return sign(y) * a * expo * std::pow(sc.c, expo - 1.0) * dc * kappa;
        };
    }

    // probability is conserved through the parent change of variables
    const Density parent = stretched_gaussian(GaussParams(p, params.lambda0));
    const double xscale = std::pow(std::fabs(1.0 - params.lambda0), -1.0 / ps);
    if (hyperbolic) {
        d.cdf = [tp, kappa, xscale, parent](double y) {
            const auto hc = gtf::sinhcosh_vw(tp, kappa * std::fabs(y));
            return y >= 0 ? parent.cdf(xscale * hc.sh) : 1.0 - parent.cdf(xscale * hc.sh);
        };
    } else {
        d.cdf = [tp, kappa, xscale, parent, R](double y) {
            if (y <= -R) return 0.0;
            if (y >= R) return 1.0;
            const auto sc = gtf::sincos_vw(tp, kappa * std::fabs(y));
            return y >= 0 ? parent.cdf(xscale * sc.s) : 1.0 - parent.cdf(xscale * sc.s);
        };
    }
    return d;
}

Density g_frak(double p, double beta) {
    if (std::fabs(beta - 1.0) < kLimitTol)
        throw DispatchError("g_frak: beta = 1 is the stretched Gaussian g_{p,1}");
    GaussParams parent(p, 1.0);  // validates p* > 0
    const double ps = parent.p_star();
    const double a = stretched_gaussian_norm(p, 1.0);
    const double c = ps * std::pow(std::fabs(beta - 1.0) / beta, 1.0 / ps);
    if (!(beta > 0.0) || !std::isfinite(c))
        throw ParameterError("g_frak: requires beta > 0");

    Density d;
    d.label = "gfrak:" + fmt_params({p, beta});
    d.family = MinimizerId{p, beta, 1.0, 1.0};
    d.tail_exponent = kInf;  // exponential-or-lighter in the parent coordinate

    // G(u) = p* int_0^u exp(-sign(beta-1) t^{p*}) dt, strictly increasing;
    // the pdf at x solves G(u) = c |x| and reads a exp(-u^{p*}/|beta-1|).
    const bool light = beta > 1.0;  // decaying integrand -> compact support
    std::function<double(double)> G;
    if (light) {
        const double g0 = std::tgamma(1.0 / ps);
        G = [ps, g0](double u) { return g0 * boost::math::gamma_p(1.0 / ps, std::pow(u, ps)); };
    } else {
        auto cache = std::make_shared<std::map<double, double>>();
        auto mtx = std::make_shared<std::mutex>();
        (*cache)[0.0] = 0.0;
        G = [ps, cache, mtx](double u) {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = cache->lower_bound(u);
            double u0, g0;
            if (it != cache->end() && it->first == u) return it->second;
            if (it == cache->begin()) {
                u0 = 0.0;
                g0 = 0.0;
            } else {
                --it;
                u0 = it->first;
                g0 = it->second;
            }
            const double val =
                g0 + ps * quad::integrate([ps](double t) { return std::exp(std::pow(t, ps)); },
                                          u0, u, quad::Options{1e-13, 1e-13}).value;
            if (cache->size() < 100'000) (*cache)[u] = val;
            return val;
        };
    }

    const double Gmax = light ? std::tgamma(1.0 / ps) : kInf;
    const double R = light ? Gmax / c : kInf;
    d.support = std::isfinite(R) ? symmetric_interval(R) : real_line();

    const double babs = std::fabs(beta - 1.0);
    auto u_of_x = [G, c, Gmax, ps, light](double x) {
        const double target = c * std::fabs(x);
        if (light && target >= Gmax) return kInf;
        double hi = 1.0;
        while (G(hi) < target) hi *= 2.0;
        auto dG = [ps, light](double u) {
            return ps * std::exp((light ? -1.0 : 1.0) * std::pow(u, ps));
        };
        return roots::invert_increasing(G, target, 0.0, hi, dG);
    };
    d.pdf = [u_of_x, a, ps, babs, R](double x) {
        if (std::fabs(x) >= R) return 0.0;
        const double u = u_of_x(x);
        return a * std::exp(-std::pow(u, ps) / babs);
    };
    d.pdf_deriv = [u_of_x, a, ps, babs, R, c, light](double x) {
        if (std::fabs(x) >= R || x == 0.0) return 0.0;
        const double u = u_of_x(x);
        const double f = a * std::exp(-std::pow(u, ps) / babs);
        const double dGdu = ps * std::exp((light ? -1.0 : 1.0) * std::pow(u, ps));
        const double du = c * sign(x) / dGdu;
        return -f * ps * std::pow(u, ps - 1.0) * du / babs;
    };
    // mass conservation through the parent map: u is the parent coordinate
    const Density g1 = stretched_gaussian(GaussParams(p, 1.0));
    d.cdf = [u_of_x, g1, R](double x) {
        if (x <= -R) return 0.0;
        if (x >= R) return 1.0;
        const double u = u_of_x(x);
        return x >= 0 ? g1.cdf(u) : 1.0 - g1.cdf(u);
    };
    return d;
}

Density minimizer(double p, double beta, double lambda) {
    if (std::fabs(beta - lambda) < kLimitTol) return stretched_gaussian(GaussParams(p, lambda));
    if (std::fabs(lambda - 1.0) < kLimitTol) return g_frak(p, beta);
    return gtd(GtdParams(p, beta, lambda));
}

Density uniform01() {
    Density d;
    d.label = "uniform:0,1";
    d.support = Interval{0.0, 1.0};
    d.pdf = [](double x) { return (x > 0.0 && x < 1.0) ? 1.0 : 0.0; };
    d.pdf_deriv = [](double) { return 0.0; };
    d.cdf = [](double x) { return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x); };
    d.tail_exponent = kInf;
    return d;
}

Density exponential_density(double rate) {
    if (!(rate > 0.0)) throw ParameterError("exponential_density: rate must be positive");
    Density d;
    d.label = "exponential:" + fmt_params({rate});
    d.support = half_line();
    d.pdf = [rate](double x) { return x > 0.0 ? rate * std::exp(-rate * x) : 0.0; };
    d.pdf_deriv = [rate](double x) { return x > 0.0 ? -rate * rate * std::exp(-rate * x) : 0.0; };
    d.cdf = [rate](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x); };
    d.tail_exponent = kInf;
    return d;
}

Density cauchy_density() {
    Density d = stretched_gaussian(GaussParams(2.0, 0.0));
    d.label = "cauchy";
    return d;
}

Density scale_density(const Density& f, double kappa) {
    if (!(kappa > 0.0)) throw ParameterError("scale_density: kappa must be positive");
    Density d;
    d.label = f.label + "_(x" + fmt_params({kappa}) + ")";
    d.support = Interval{f.support.lo / kappa, f.support.hi / kappa};
    auto base = f;  // capture by value keeps the closure self-contained
    d.pdf = [base, kappa](double x) { return kappa * base.pdf(kappa * x); };
    if (f.has_deriv())
        d.pdf_deriv = [base, kappa](double x) { return kappa * kappa * base.pdf_deriv(kappa * x); };
    if (f.has_cdf()) d.cdf = [base, kappa](double x) { return base.cdf(kappa * x); };
    d.tail_exponent = f.tail_exponent;
    d.bounded = f.bounded;
    if (f.family) {
        d.family = *f.family;
        d.family->scale *= kappa;
    }
    return d;
}

Density shift_density(const Density& f, double a) {
    Density d;
    d.label = f.label + "_shift(" + fmt_params({a}) + ")";
    d.support = Interval{f.support.lo + a, f.support.hi + a};
    auto base = f;
    d.pdf = [base, a](double x) { return base.pdf(x - a); };
    if (f.has_deriv()) d.pdf_deriv = [base, a](double x) { return base.pdf_deriv(x - a); };
    if (f.has_cdf()) d.cdf = [base, a](double x) { return base.cdf(x - a); };
    d.tail_exponent = f.tail_exponent;
    d.bounded = f.bounded;
    return d;
}

} // namespace gtdlab
