#pragma once

// Slow, independent reference evaluator for the Volterra integrals, used to
// mint golden values and to cross-validate the adaptive engine. Fixed-step
// composite midpoint rule with Richardson extrapolation across h, h/2, h/4;
// no code is shared with the Gauss-Kronrod engine, and Gamma is taken from
// the C library (std::lgamma) rather than from gammakit on purpose.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "functions.hpp"

namespace volterra {
namespace oracle {

namespace detail {

struct Composite {
    double value = 0.0;
    double err = 0.0;
    long nodes = 0;
};

// Composite midpoint sums at n, 2n, 4n cells, extrapolated twice. The error
// bound is the extrapolation residual plus a rounding allowance.
template <class F>
Composite richardson_midpoint(const F& f, double a, double b, long cells) {
    double m[3];
    double abssum = 0.0;
    long n = cells;
    for (int level = 0; level < 3; ++level, n *= 2) {
        const double h = (b - a) / static_cast<double>(n);
        double acc = 0.0;
        double abs_acc = 0.0;
        for (long i = 0; i < n; ++i) {
            const double v = f(a + (static_cast<double>(i) + 0.5) * h);
            acc += v;
            abs_acc += std::fabs(v);
        }
        m[level] = acc * h;
        abssum = abs_acc * h;
    }
    const double r1 = (4.0 * m[1] - m[0]) / 3.0;
    const double r2 = (4.0 * m[2] - m[1]) / 3.0;
    const double rr = (16.0 * r2 - r1) / 15.0;

    Composite out;
    out.value = rr;
    out.err = 2.0 * std::fabs(rr - r2) + std::fabs(r2 - r1) / 15.0 +
              4e-15 * abssum;
    out.nodes = 7 * cells;
    return out;
}

inline long cells_for(double a, double b) {
    const double h0 = 0.0625;
    const double span = b - a;
    long n = static_cast<long>(std::ceil(span / h0));
    return n < 8 ? 8 : n;
}

struct MuIntegrand {
    double logx, alpha, beta, lg_beta1;

    double smooth(double t) const {
        return std::exp((t + alpha) * logx - std::lgamma(t + alpha + 1.0) -
                        lg_beta1);
    }
    double operator()(double t) const {
        return smooth(t) * std::pow(t, beta);
    }
};

} // namespace detail

// Reference integration of a plain smooth function over a finite interval.
inline EvalResult oracle_integrate(const std::function<double(double)>& f,
                                   double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::domain_error("oracle: bad interval");
    }
    detail::Composite c = detail::richardson_midpoint(f, a, b,
                                                      detail::cells_for(a, b));
    return EvalResult{c.value, c.err, c.nodes, true};
}

// Reference value of int_{s_lower}^{s_upper} x^{t+alpha} t^beta /
// (Gamma(t+alpha+1) Gamma(beta+1)) dt; s_upper may be +infinity.
inline EvalResult oracle_mu(const VolterraParams& p, double s_lower,
                            double s_upper, double tol = 1e-10) {
    if (!(p.x > 0.0) || !(p.alpha > -1.0) || !(p.beta > -1.0)) {
        throw std::domain_error("oracle: parameters out of domain");
    }
    if (!(s_lower >= 0.0) || !(s_lower < s_upper)) {
        throw std::domain_error("oracle: bad split interval");
    }

    const detail::MuIntegrand f{std::log(p.x), p.alpha, p.beta,
                                std::lgamma(p.beta + 1.0)};

    double T = s_upper;
    double tail = 0.0;
    if (!std::isfinite(s_upper)) {
        // At T the unit-step decay ratio is far below 1/2 for any x that the
        // truncation reaches, so the discarded tail is below 2 f(T).
        T = std::max(300.0, 4.0 * 2.718281828459045 * p.x + 16.0);
        const double log_f_T = (T + p.alpha) * f.logx -
                               std::lgamma(T + p.alpha + 1.0) - f.lg_beta1 +
                               p.beta * std::log(T);
        tail = log_f_T < -690.0 ? 1e-300 : 2.0 * std::exp(log_f_T);
    }

    EvalResult res;
    const bool singular_left =
        s_lower == 0.0 && (p.beta < 0.0 || p.beta != std::floor(p.beta));

    if (singular_left) {
        // Leading closed-form term on [0,delta]: int_0^delta t^beta dt times
        // the smooth factor at the midpoint, refined by halving delta.
        auto total = [&](double delta) {
            const double sliver = std::pow(delta, p.beta + 1.0) /
                                  (p.beta + 1.0) * f.smooth(0.5 * delta);
            detail::Composite c = detail::richardson_midpoint(
                f, delta, T, detail::cells_for(delta, T));
            res.nodes_used += c.nodes + 1;
            res.abs_error_bound = c.err;
            return sliver + c.value;
        };
        const double delta0 = std::min(0.0625, 0.25 * T);
        const double coarse = total(delta0);
        const double fine = total(0.5 * delta0);
        res.value = fine;
        res.abs_error_bound += 2.0 * std::fabs(fine - coarse);
    } else {
        detail::Composite c = detail::richardson_midpoint(
            f, s_lower, T, detail::cells_for(s_lower, T));
        res.value = c.value;
        res.abs_error_bound = c.err;
        res.nodes_used = c.nodes;
    }

    res.abs_error_bound += tail;
    res.converged = res.abs_error_bound <= tol;
    return res;
}

} // namespace oracle
} // namespace volterra
