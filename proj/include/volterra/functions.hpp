#pragma once

// Evaluators for the complete and incomplete Volterra integrals
//
//   mu(x,beta,alpha)    = int_0^inf x^{t+alpha} t^beta / (Gamma(t+alpha+1) Gamma(beta+1)) dt
//   mu_upper / mu_lower = the same integral over (s,inf) / (0,s)
//
// together with the normalized ratios G = mu_upper/mu and G* = mu_lower/mu,
// the beta-derivative integrals D_n of F(beta) = Gamma(beta+1) mu, the
// log-convexity kernel K(beta) = (D0 D2 - D1^2)/D0^2, and the negative-
// argument nu via the Ramanujan integral. Everything is evaluated in
// log-space (exp((t+alpha) log x - lnGamma(t+alpha+1))) so large t never
// overflows, and every result carries a propagated absolute error bound.

#include <cmath>
#include <stdexcept>

#include "gammakit.hpp"
#include "quadrature.hpp"

namespace volterra {

using quad::EvalResult;
using quad::IntegrandSpec;

inline constexpr double default_tol = 1e-10;

struct VolterraParams {
    double x;     // > 0
    double alpha; // > -1
    double beta;  // > -1
};

// Raised when a ratio denominator is not resolved beyond its own error bound.
struct precision_loss_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void validate(const VolterraParams& p) {
    if (!(p.x > 0.0) || !std::isfinite(p.x)) {
        throw std::domain_error("volterra: x must be positive and finite");
    }
    if (!(p.alpha > -1.0) || !std::isfinite(p.alpha)) {
        throw std::domain_error("volterra: alpha must exceed -1");
    }
    if (!(p.beta > -1.0) || !std::isfinite(p.beta)) {
        throw std::domain_error("volterra: beta must exceed -1");
    }
}

inline void validate_split(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw std::domain_error("volterra: split point s must be finite and >= 0");
    }
}

// Smooth factor x^{t+alpha} / Gamma(t+alpha+1), continuous on [0, inf).
inline std::function<double(double)> power_over_gamma(double x, double alpha) {
    const double logx = std::log(x);
    return [logx, alpha](double t) {
        return std::exp((t + alpha) * logx -
                        gammakit::ln_gamma(t + alpha + 1.0));
    };
}

// Past T = max(4 e x + |alpha| + |beta| + 16, lower + 16) the unit-step
// ratio x ((t+1)/t)^beta (log(t+1)/log t)^n / (t+alpha+1) stays below 1/2,
// by the Gamma recurrence; safe truncation hint for every integrand here.
inline double truncation_point(const VolterraParams& p, double lower) {
    constexpr double e = 2.718281828459045;
    return std::max(4.0 * e * p.x + std::fabs(p.alpha) + std::fabs(p.beta) + 16.0,
                    lower + 16.0);
}

inline EvalResult ratio(const EvalResult& num, const EvalResult& den) {
    if (!(std::fabs(den.value) > 10.0 * den.abs_error_bound)) {
        throw precision_loss_error(
            "volterra: ratio denominator smaller than 10x its error bound");
    }
    EvalResult out;
    out.value = num.value / den.value;
    out.abs_error_bound =
        num.abs_error_bound / std::fabs(den.value) +
        std::fabs(num.value) * den.abs_error_bound / (den.value * den.value);
    out.nodes_used = num.nodes_used + den.nodes_used;
    out.converged = num.converged && den.converged;
    return out;
}

} // namespace detail

// mu(x,beta,alpha,s) = int_s^inf, the upper incomplete function.
inline EvalResult mu_upper(const VolterraParams& p, double s,
                           double tol = default_tol) {
    detail::validate(p);
    detail::validate_split(s);
    IntegrandSpec spec;
    spec.evaluator = detail::power_over_gamma(p.x, p.alpha);
    spec.left_exponent = p.beta;
    spec.lower = s;
    spec.truncation_hint = detail::truncation_point(p, s);
    EvalResult res = quad::integrate_semi_infinite(spec, tol);
    const double rg = gammakit::recip_gamma(p.beta + 1.0);
    res.value *= rg;
    res.abs_error_bound = res.abs_error_bound * rg + std::fabs(res.value) * 2e-14;
    return res;
}

// mu*(x,beta,alpha,s) = int_0^s, the lower incomplete function.
inline EvalResult mu_lower(const VolterraParams& p, double s,
                           double tol = default_tol) {
    detail::validate(p);
    detail::validate_split(s);
    if (s == 0.0) return EvalResult{0.0, 0.0, 1, true};
    IntegrandSpec spec;
    spec.evaluator = detail::power_over_gamma(p.x, p.alpha);
    spec.left_exponent = p.beta;
    spec.lower = 0.0;
    spec.upper = s;
    EvalResult res = quad::integrate_finite(spec, tol);
    const double rg = gammakit::recip_gamma(p.beta + 1.0);
    res.value *= rg;
    res.abs_error_bound = res.abs_error_bound * rg + std::fabs(res.value) * 2e-14;
    return res;
}

// The complete function mu(x,beta,alpha) = mu(x,beta,alpha,0).
inline EvalResult mu(const VolterraParams& p, double tol = default_tol) {
    return mu_upper(p, 0.0, tol);
}

inline EvalResult nu(double x, double tol = default_tol) {
    return mu({x, 0.0, 0.0}, tol);
}

inline EvalResult nu_alpha(double x, double alpha, double tol = default_tol) {
    return mu({x, alpha, 0.0}, tol);
}

inline EvalResult mu_beta(double x, double beta, double tol = default_tol) {
    return mu({x, 0.0, beta}, tol);
}

// G_beta(x,alpha,s) = mu_upper / mu, in [0,1].
inline EvalResult g(const VolterraParams& p, double s, double tol = default_tol) {
    return detail::ratio(mu_upper(p, s, tol), mu(p, tol));
}

// G*_beta(x,alpha,s) = mu_lower / mu, in [0,1].
inline EvalResult g_star(const VolterraParams& p, double s,
                         double tol = default_tol) {
    return detail::ratio(mu_lower(p, s, tol), mu(p, tol));
}

// D_n = d^n/dbeta^n [Gamma(beta+1) mu] = int_0^inf x^{t+alpha} t^beta log^n(t)
//       / Gamma(t+alpha+1) dt. For n >= 1 the integral is split at t = 1 where
// log^n changes sign, so the bound is the sum of two one-signed-region bounds.
inline EvalResult f_derivative(int n, const VolterraParams& p,
                               double tol = default_tol) {
    detail::validate(p);
    if (n < 0) throw std::domain_error("volterra: derivative order must be >= 0");

    IntegrandSpec spec;
    spec.evaluator = detail::power_over_gamma(p.x, p.alpha);
    spec.left_exponent = p.beta;
    spec.log_power = n;

    if (n == 0) {
        spec.truncation_hint = detail::truncation_point(p, 0.0);
        return quad::integrate_semi_infinite(spec, tol);
    }

    IntegrandSpec head = spec;
    head.upper = 1.0;
    EvalResult inner = quad::integrate_finite(head, 0.5 * tol);

    IntegrandSpec tail = spec;
    tail.lower = 1.0;
    tail.truncation_hint = detail::truncation_point(p, 1.0);
    EvalResult outer = quad::integrate_semi_infinite(tail, 0.5 * tol);

    EvalResult res;
    res.value = inner.value + outer.value;
    res.abs_error_bound = inner.abs_error_bound + outer.abs_error_bound;
    res.nodes_used = inner.nodes_used + outer.nodes_used;
    res.converged = inner.converged && outer.converged;
    return res;
}

// K(beta) = d^2 log[Gamma(beta+1) mu] / dbeta^2 = (D0 D2 - D1^2) / D0^2,
// nonnegative by the log-convexity of Gamma(beta+1) mu.
inline EvalResult k_beta(const VolterraParams& p, double tol = default_tol) {
    const EvalResult d0 = f_derivative(0, p, tol);
    const EvalResult d1 = f_derivative(1, p, tol);
    const EvalResult d2 = f_derivative(2, p, tol);
    if (!(std::fabs(d0.value) > 10.0 * d0.abs_error_bound)) {
        throw precision_loss_error("volterra: k_beta cannot resolve D0");
    }
    const double num = d0.value * d2.value - d1.value * d1.value;
    const double num_err = std::fabs(d2.value) * d0.abs_error_bound +
                           std::fabs(d0.value) * d2.abs_error_bound +
                           2.0 * std::fabs(d1.value) * d1.abs_error_bound;
    const double den = d0.value * d0.value;
    EvalResult res;
    res.value = num / den;
    res.abs_error_bound = num_err / den + 2.0 * std::fabs(num) *
                          d0.abs_error_bound / (den * std::fabs(d0.value));
    res.nodes_used = d0.nodes_used + d1.nodes_used + d2.nodes_used;
    res.converged = d0.converged && d1.converged && d2.converged;
    return res;
}

// f(x) = e^{-x} - nu(-x) = int_0^inf e^{-xt} / (t (log^2 t + pi^2)) dt for
// x > 0, the Ramanujan integral. Split at t = 1/e: the substitution
// u = -1/log t flattens the left piece onto (0,1] with integrand
// e^{-x e^{-1/u}} / (1 + pi^2 u^2); the substitution v = log t maps the right
// piece to e^{-x e^v} / (v^2 + pi^2) on [-1, inf), truncated where
// x e^V >= 45 with the exact arctan tail as the discard bound.
inline EvalResult nu_neg_complement(double x, double tol = default_tol) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("volterra: nu_neg_complement needs x > 0");
    }
    constexpr double pi = 3.141592653589793;

    IntegrandSpec left;
    left.evaluator = [x](double u) {
        return std::exp(-x * std::exp(-1.0 / u)) / (1.0 + pi * pi * u * u);
    };
    left.upper = 1.0;
    EvalResult res = quad::integrate_finite(left, 0.5 * tol);

    const double v_cut = std::log(45.0 / x);
    double tail_from = -1.0;
    if (v_cut > -1.0 + 1e-9) {
        // shifted to w = v + 1 so the interval starts at 0
        IntegrandSpec right;
        right.evaluator = [x](double w) {
            const double v = w - 1.0;
            return std::exp(-x * std::exp(v)) / (v * v + pi * pi);
        };
        right.upper = v_cut + 1.0;
        EvalResult part = quad::integrate_finite(right, 0.5 * tol);
        res.value += part.value;
        res.abs_error_bound += part.abs_error_bound;
        res.nodes_used += part.nodes_used;
        res.converged = res.converged && part.converged;
        tail_from = v_cut;
    }
    res.abs_error_bound += std::exp(-x * std::exp(tail_from)) *
                           (0.5 - std::atan(tail_from / pi) / pi);
    return res;
}

// nu(-x) = e^{-x} - nu_neg_complement(x), for x > 0.
inline EvalResult nu_neg(double x, double tol = default_tol) {
    EvalResult comp = nu_neg_complement(x, tol);
    EvalResult res;
    res.value = std::exp(-x) - comp.value;
    res.abs_error_bound = comp.abs_error_bound + std::exp(-x) * 1e-16;
    res.nodes_used = comp.nodes_used;
    res.converged = comp.converged;
    return res;
}

} // namespace volterra
