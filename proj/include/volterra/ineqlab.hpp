#pragma once

// Evaluates the inequality and monotonicity properties of the Volterra
// family at concrete parameter points. Every check produces signed margins
// oriented so that margin >= 0 means the inequality holds, together with a
// first-order propagated error band; verdicts are three-valued (holds /
// fails / inconclusive) so that quadrature noise can never masquerade as a
// counterexample. A sweep driver expands parameter grids, filters them by
// each check's hypotheses, and emits reports in deterministic grid order no
// matter how many worker threads run the points.

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "functions.hpp"
#include "means.hpp"

namespace volterra {
namespace ineq {

enum class Verdict { holds, fails, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "inconclusive";
    }
}

struct InequalityReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;         // rhs - lhs
    double combined_error = 0.0; // first-order propagated bound on margin
    Verdict verdict = Verdict::inconclusive;
};

inline Verdict classify(double margin, double err) {
    if (margin > err) return Verdict::holds;
    if (margin < -err) return Verdict::fails;
    return Verdict::inconclusive;
}

// Flat superset of every parameter any check reads.
struct CheckParams {
    double x = 1.0;
    double y = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double beta1 = 0.0;
    double beta2 = 1.0;
    double beta3 = 2.0;
    double s = 1.0;
    double s2 = 1.0;
    double lambda = 0.5;
    double r = 0.0; // power-mean order, +-inf allowed
    double m = 0.0; // midpoint for the log-concavity/convexity probes
    double delta = 0.5;
    double h = 0.1; // complete-monotonicity step
    int n = 1;      // odd derivative order
    int order = 4;  // highest finite-difference order
};

namespace detail {

struct ParamSlot {
    const char* name;
    double (*get)(const CheckParams&);
    void (*set)(CheckParams&, double);
};

inline const std::vector<ParamSlot>& param_slots() {
    static const std::vector<ParamSlot> slots = {
        {"x", [](const CheckParams& p) { return p.x; },
         [](CheckParams& p, double v) { p.x = v; }},
        {"y", [](const CheckParams& p) { return p.y; },
         [](CheckParams& p, double v) { p.y = v; }},
        {"alpha", [](const CheckParams& p) { return p.alpha; },
         [](CheckParams& p, double v) { p.alpha = v; }},
        {"beta", [](const CheckParams& p) { return p.beta; },
         [](CheckParams& p, double v) { p.beta = v; }},
        {"beta1", [](const CheckParams& p) { return p.beta1; },
         [](CheckParams& p, double v) { p.beta1 = v; }},
        {"beta2", [](const CheckParams& p) { return p.beta2; },
         [](CheckParams& p, double v) { p.beta2 = v; }},
        {"beta3", [](const CheckParams& p) { return p.beta3; },
         [](CheckParams& p, double v) { p.beta3 = v; }},
        {"s", [](const CheckParams& p) { return p.s; },
         [](CheckParams& p, double v) { p.s = v; }},
        {"s2", [](const CheckParams& p) { return p.s2; },
         [](CheckParams& p, double v) { p.s2 = v; }},
        {"lambda", [](const CheckParams& p) { return p.lambda; },
         [](CheckParams& p, double v) { p.lambda = v; }},
        {"r", [](const CheckParams& p) { return p.r; },
         [](CheckParams& p, double v) { p.r = v; }},
        {"m", [](const CheckParams& p) { return p.m; },
         [](CheckParams& p, double v) { p.m = v; }},
        {"delta", [](const CheckParams& p) { return p.delta; },
         [](CheckParams& p, double v) { p.delta = v; }},
        {"h", [](const CheckParams& p) { return p.h; },
         [](CheckParams& p, double v) { p.h = v; }},
        {"n", [](const CheckParams& p) { return double(p.n); },
         [](CheckParams& p, double v) { p.n = int(std::lround(v)); }},
        {"order", [](const CheckParams& p) { return double(p.order); },
         [](CheckParams& p, double v) { p.order = int(std::lround(v)); }},
    };
    return slots;
}

inline const ParamSlot* find_slot(const std::string& name) {
    for (const auto& s : param_slots()) {
        if (name == s.name) return &s;
    }
    return nullptr;
}

inline std::vector<std::pair<std::string, double>>
record_params(const CheckParams& p, const std::vector<std::string>& axes) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(axes.size());
    for (const auto& a : axes) {
        const ParamSlot* slot = find_slot(a);
        if (slot) out.emplace_back(a, slot->get(p));
    }
    return out;
}

inline InequalityReport finish(std::string name,
                               std::vector<std::pair<std::string, double>> ps,
                               double lhs, double rhs, double err) {
    InequalityReport rep;
    rep.name = std::move(name);
    rep.params = std::move(ps);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.margin = rhs - lhs;
    rep.combined_error = err;
    rep.verdict = classify(rep.margin, err);
    return rep;
}

inline double binom(int n, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

} // namespace detail

inline bool set_param(CheckParams& p, const std::string& name, double value) {
    const detail::ParamSlot* slot = detail::find_slot(name);
    if (!slot) return false;
    slot->set(p, value);
    return true;
}

inline double get_param(const CheckParams& p, const std::string& name) {
    const detail::ParamSlot* slot = detail::find_slot(name);
    if (!slot) throw std::invalid_argument("unknown parameter: " + name);
    return slot->get(p);
}

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

// mu(x^l y^(1-l)) <= mu(x)^l mu(y)^(1-l): geometric convexity in x.
inline InequalityReport check_geometric_convexity(double x, double y,
                                                  double lambda, double alpha,
                                                  double beta,
                                                  double tol = default_tol) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::domain_error("geometric-convexity: lambda must be in [0,1]");
    }
    CheckParams rec;
    rec.x = x;
    rec.y = y;
    rec.lambda = lambda;
    rec.alpha = alpha;
    rec.beta = beta;
    auto ps = detail::record_params(rec, {"x", "y", "lambda", "alpha", "beta"});

    const double xm = std::exp(lambda * std::log(x) + (1.0 - lambda) * std::log(y));
    const EvalResult lhs = mu({xm, alpha, beta}, tol);
    if (lambda == 1.0 || lambda == 0.0 || x == y) {
        // degenerate: both sides are the same integral
        return detail::finish("geometric-convexity", ps, lhs.value, lhs.value,
                              2.0 * lhs.abs_error_bound);
    }
    const EvalResult mx = mu({x, alpha, beta}, tol);
    const EvalResult my = mu({y, alpha, beta}, tol);
    const double rhs = std::exp(lambda * std::log(mx.value) +
                                (1.0 - lambda) * std::log(my.value));
    const double err = lhs.abs_error_bound +
                       rhs * lambda / mx.value * mx.abs_error_bound +
                       rhs * (1.0 - lambda) / my.value * my.abs_error_bound;
    return detail::finish("geometric-convexity", ps, lhs.value, rhs, err);
}

// mu(x,b,a+1)^2 - mu(x,b,a) mu(x,b,a+2) >= 0.
inline InequalityReport check_turan_alpha(const VolterraParams& p,
                                          double tol = default_tol) {
    const EvalResult m0 = mu({p.x, p.alpha, p.beta}, tol);
    const EvalResult m1 = mu({p.x, p.alpha + 1.0, p.beta}, tol);
    const EvalResult m2 = mu({p.x, p.alpha + 2.0, p.beta}, tol);
    CheckParams rec;
    rec.x = p.x;
    rec.alpha = p.alpha;
    rec.beta = p.beta;
    const double lhs = m0.value * m2.value;
    const double rhs = m1.value * m1.value;
    const double err = 2.0 * std::fabs(m1.value) * m1.abs_error_bound +
                       std::fabs(m2.value) * m0.abs_error_bound +
                       std::fabs(m0.value) * m2.abs_error_bound;
    return detail::finish("turan-alpha",
                          detail::record_params(rec, {"x", "alpha", "beta"}),
                          lhs, rhs, err);
}

// 0 <= mu(x,b+1,a)^2 - mu(x,b,a) mu(x,b+2,a) <= mu(x,b+1,a)^2 / (b+2).
inline std::pair<InequalityReport, InequalityReport>
check_turan_beta_bounds(const VolterraParams& p, double tol = default_tol) {
    const EvalResult b0 = mu({p.x, p.alpha, p.beta}, tol);
    const EvalResult b1 = mu({p.x, p.alpha, p.beta + 1.0}, tol);
    const EvalResult b2 = mu({p.x, p.alpha, p.beta + 2.0}, tol);
    CheckParams rec;
    rec.x = p.x;
    rec.alpha = p.alpha;
    rec.beta = p.beta;
    auto ps = detail::record_params(rec, {"x", "alpha", "beta"});

    const double sq = b1.value * b1.value;
    const double prod = b0.value * b2.value;
    const double e_sq = 2.0 * std::fabs(b1.value) * b1.abs_error_bound;
    const double e_prod = std::fabs(b2.value) * b0.abs_error_bound +
                          std::fabs(b0.value) * b2.abs_error_bound;

    InequalityReport low =
        detail::finish("turan-beta-lower", ps, prod, sq, e_sq + e_prod);
    InequalityReport up =
        detail::finish("turan-beta-upper", ps, sq - prod, sq / (p.beta + 2.0),
                       e_sq + e_prod + e_sq / (p.beta + 2.0));
    return {low, up};
}

// Kimberling form f(x)f(y) <= f(x+y) for f = nu_neg_complement, plus the
// expanded nu(-.) form; the two margins are algebraically identical.
inline std::pair<InequalityReport, InequalityReport>
check_kimberling(double x, double y, double tol = default_tol) {
    const EvalResult fx = nu_neg_complement(x, tol);
    const EvalResult fy = nu_neg_complement(y, tol);
    const EvalResult fxy = nu_neg_complement(x + y, tol);
    CheckParams rec;
    rec.x = x;
    rec.y = y;
    auto ps = detail::record_params(rec, {"x", "y"});

    const double e_prod = std::fabs(fy.value) * fx.abs_error_bound +
                          std::fabs(fx.value) * fy.abs_error_bound;
    InequalityReport kim =
        detail::finish("kimberling-kim", ps, fx.value * fy.value, fxy.value,
                       e_prod + fxy.abs_error_bound);

    const double ex = std::exp(-x);
    const double ey = std::exp(-y);
    const double nx = ex - fx.value;
    const double ny = ey - fy.value;
    const double nxy = ex * ey - fxy.value;
    const double lhs = nx * ny + nxy;
    const double rhs = ex * ny + ey * nx;
    const double err = (std::fabs(ny) + ex) * fx.abs_error_bound +
                       (std::fabs(nx) + ey) * fy.abs_error_bound +
                       fxy.abs_error_bound;
    InequalityReport mal = detail::finish("kimberling-mal", ps, lhs, rhs, err);
    return {kim, mal};
}

namespace detail {

// Delta_n = D_{n-1} D_{n+1} - D_n^2, with its propagated bound.
struct DeltaValue {
    double value;
    double err;
};

inline DeltaValue delta_n_value(int n, const VolterraParams& p, double tol) {
    const EvalResult lo = f_derivative(n - 1, p, tol);
    const EvalResult mid = f_derivative(n, p, tol);
    const EvalResult hi = f_derivative(n + 1, p, tol);
    DeltaValue d;
    d.value = lo.value * hi.value - mid.value * mid.value;
    d.err = std::fabs(hi.value) * lo.abs_error_bound +
            std::fabs(lo.value) * hi.abs_error_bound +
            2.0 * std::fabs(mid.value) * mid.abs_error_bound;
    return d;
}

} // namespace detail

// Delta_n = D_{n-1} D_{n+1} - D_n^2 >= 0 for odd n: the high-order Turan
// inequality in beta.
inline InequalityReport check_delta_n(int n, const VolterraParams& p,
                                      double tol = default_tol) {
    if (n < 1 || n % 2 == 0) {
        throw std::domain_error("delta-n: n must be an odd integer >= 1");
    }
    const EvalResult lo = f_derivative(n - 1, p, tol);
    const EvalResult mid = f_derivative(n, p, tol);
    const EvalResult hi = f_derivative(n + 1, p, tol);
    CheckParams rec;
    rec.x = p.x;
    rec.alpha = p.alpha;
    rec.beta = p.beta;
    rec.n = n;
    const double err = std::fabs(hi.value) * lo.abs_error_bound +
                       std::fabs(lo.value) * hi.abs_error_bound +
                       2.0 * std::fabs(mid.value) * mid.abs_error_bound;
    return detail::finish("delta-n",
                          detail::record_params(rec, {"n", "x", "alpha", "beta"}),
                          mid.value * mid.value, lo.value * hi.value, err);
}

// sum over cyclic (b_i - b_j)(b_i - b_k) Delta_n(b_i) >= 0.
inline InequalityReport check_schur(int n, double x, double alpha, double beta1,
                                    double beta2, double beta3,
                                    double tol = default_tol) {
    if (n < 1 || n % 2 == 0) {
        throw std::domain_error("schur: n must be an odd integer >= 1");
    }
    const double betas[3] = {beta1, beta2, beta3};
    const double coef[3] = {(beta1 - beta2) * (beta1 - beta3),
                            (beta2 - beta1) * (beta2 - beta3),
                            (beta3 - beta1) * (beta3 - beta2)};
    double total = 0.0;
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (coef[i] == 0.0) continue;
        const detail::DeltaValue d =
            detail::delta_n_value(n, {x, alpha, betas[i]}, tol);
        total += coef[i] * d.value;
        err += std::fabs(coef[i]) * d.err;
    }
    CheckParams rec;
    rec.x = x;
    rec.alpha = alpha;
    rec.beta1 = beta1;
    rec.beta2 = beta2;
    rec.beta3 = beta3;
    rec.n = n;
    return detail::finish(
        "schur",
        detail::record_params(rec, {"n", "x", "alpha", "beta1", "beta2", "beta3"}),
        0.0, total, err);
}

enum class LogConcavityTarget { mu_in_beta, mu_in_alpha, g_in_beta, g_star_in_beta };

// Midpoint criterion f(m)^2 >= f(m-d) f(m+d) on the selected family.
inline InequalityReport check_logconcavity(LogConcavityTarget target,
                                           const CheckParams& p,
                                           double tol = default_tol) {
    auto eval = [&](double v) -> EvalResult {
        switch (target) {
            case LogConcavityTarget::mu_in_beta:
                return mu({p.x, p.alpha, v}, tol);
            case LogConcavityTarget::mu_in_alpha:
                return mu({p.x, v, p.beta}, tol);
            case LogConcavityTarget::g_in_beta:
                return g({p.x, p.alpha, v}, p.s, tol);
            default:
                return g_star({p.x, p.alpha, v}, p.s, tol);
        }
    };
    const char* name = target == LogConcavityTarget::mu_in_beta  ? "logconcavity-mu-beta"
                     : target == LogConcavityTarget::mu_in_alpha ? "logconcavity-mu-alpha"
                     : target == LogConcavityTarget::g_in_beta   ? "logconcavity-g-beta"
                                                                 : "logconcavity-gstar-beta";
    std::vector<std::string> axes;
    if (target == LogConcavityTarget::mu_in_beta) axes = {"x", "alpha", "m", "delta"};
    else if (target == LogConcavityTarget::mu_in_alpha) axes = {"x", "beta", "m", "delta"};
    else axes = {"x", "alpha", "s", "m", "delta"};
    auto ps = detail::record_params(p, axes);

    const EvalResult fm = eval(p.m);
    if (p.delta == 0.0) {
        const double v = fm.value * fm.value;
        return detail::finish(name, ps, v, v, 4.0 * std::fabs(fm.value) * fm.abs_error_bound);
    }
    const EvalResult flo = eval(p.m - p.delta);
    const EvalResult fhi = eval(p.m + p.delta);
    const double lhs = flo.value * fhi.value;
    const double rhs = fm.value * fm.value;
    const double err = 2.0 * std::fabs(fm.value) * fm.abs_error_bound +
                       std::fabs(fhi.value) * flo.abs_error_bound +
                       std::fabs(flo.value) * fhi.abs_error_bound;
    return detail::finish(name, ps, lhs, rhs, err);
}

// Midpoint criterion H(m-d) H(m+d) >= H(m)^2 for H(b) = Gamma(b+1) mu.
inline InequalityReport check_logconvexity_H(const CheckParams& p,
                                             double tol = default_tol) {
    auto ps = detail::record_params(p, {"x", "alpha", "m", "delta"});
    const EvalResult hm = f_derivative(0, {p.x, p.alpha, p.m}, tol);
    if (p.delta == 0.0) {
        const double v = hm.value * hm.value;
        return detail::finish("logconvexity-h", ps, v, v,
                              4.0 * std::fabs(hm.value) * hm.abs_error_bound);
    }
    const EvalResult hlo = f_derivative(0, {p.x, p.alpha, p.m - p.delta}, tol);
    const EvalResult hhi = f_derivative(0, {p.x, p.alpha, p.m + p.delta}, tol);
    const double lhs = hm.value * hm.value;
    const double rhs = hlo.value * hhi.value;
    const double err = 2.0 * std::fabs(hm.value) * hm.abs_error_bound +
                       std::fabs(hhi.value) * hlo.abs_error_bound +
                       std::fabs(hlo.value) * hhi.abs_error_bound;
    return detail::finish("logconvexity-h", ps, lhs, rhs, err);
}

enum class CmTarget { mu_recip_x, nu_neg_complement_t, exp_control };

// (-1)^k Delta_h^k f(x) >= 0 for k = 0..order: the finite-difference
// necessary condition for complete monotonicity.
inline std::vector<InequalityReport>
check_complete_monotonicity(CmTarget target, const CheckParams& p,
                            double tol = default_tol) {
    if (!(p.h > 0.0)) throw std::domain_error("cm: step h must be positive");
    if (p.order < 0 || p.order > 6) {
        throw std::domain_error("cm: difference order must be in [0,6]");
    }
    const char* name = target == CmTarget::mu_recip_x ? "cm-mu-recip-x"
                     : target == CmTarget::nu_neg_complement_t
                         ? "cm-nu-neg-complement"
                         : "cm-exp-control";
    if (target == CmTarget::mu_recip_x && p.alpha < 0.0) {
        throw std::domain_error("cm-mu-recip-x: requires alpha >= 0");
    }

    std::vector<EvalResult> f(p.order + 1);
    for (int k = 0; k <= p.order; ++k) {
        const double t = p.x + k * p.h;
        switch (target) {
            case CmTarget::mu_recip_x:
                f[k] = mu({1.0 / t, p.alpha, p.beta}, tol);
                break;
            case CmTarget::nu_neg_complement_t:
                f[k] = nu_neg_complement(t, tol);
                break;
            default:
                f[k] = EvalResult{std::exp(-t), 0.0, 1, true};
                break;
        }
    }

    std::vector<std::string> axes = target == CmTarget::mu_recip_x
        ? std::vector<std::string>{"x", "alpha", "beta", "h", "n"}
        : std::vector<std::string>{"x", "h", "n"};

    std::vector<InequalityReport> out;
    for (int n = 0; n <= p.order; ++n) {
        double diff = 0.0;
        double err = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double c = detail::binom(n, k);
            diff += (k % 2 == 0 ? c : -c) * f[k].value;
            err += c * f[k].abs_error_bound;
        }
        CheckParams rec = p;
        rec.n = n;
        out.push_back(detail::finish(name, detail::record_params(rec, axes),
                                     0.0, diff, err));
    }
    return out;
}

namespace detail {

inline EvalResult g_or_star(bool star, const VolterraParams& p, double s,
                            double tol) {
    return star ? g_star(p, s, tol) : g(p, s, tol);
}

// |dM/dG_i| for the two-point power mean, used for first-order propagation.
inline double mean_sensitivity(double r, double gi, double weight, double mval) {
    if (std::isinf(r)) return 1.0; // extreme picks one argument
    if (std::fabs(r) < 1e-8) return weight * mval / gi;
    return weight * std::pow(gi / mval, r - 1.0);
}

} // namespace detail

// Lower bound G_{l b1 + (1-l) b2} >= M_r(G_{b1}, G_{b2}; l), valid for r <= 0.
// Upper bound M_inf(G_{b1}, G_{b2}; l) >= G_{l b1 + (1-l) b2}.
inline InequalityReport check_g_power_mean(bool star, bool upper,
                                           const CheckParams& p,
                                           double tol = default_tol) {
    if (!(p.lambda > 0.0 && p.lambda < 1.0)) {
        throw std::domain_error("power-mean: lambda must be in (0,1)");
    }
    const double r = upper ? std::numeric_limits<double>::infinity() : p.r;
    if (!upper && r > 0.0) {
        throw std::domain_error("power-mean lower bound: order r must be <= 0");
    }
    const double bmid = p.lambda * p.beta1 + (1.0 - p.lambda) * p.beta2;
    const EvalResult g1 =
        detail::g_or_star(star, {p.x, p.alpha, p.beta1}, p.s, tol);
    const EvalResult g2 =
        detail::g_or_star(star, {p.x, p.alpha, p.beta2}, p.s, tol);
    const EvalResult gm =
        detail::g_or_star(star, {p.x, p.alpha, bmid}, p.s, tol);

    const double mval = means::power_mean(means::PowerMeanOrder{r}, g1.value,
                                          g2.value, p.lambda);
    const double e_mean =
        detail::mean_sensitivity(r, g1.value, p.lambda, mval) * g1.abs_error_bound +
        detail::mean_sensitivity(r, g2.value, 1.0 - p.lambda, mval) * g2.abs_error_bound;
    const double err = e_mean + gm.abs_error_bound;

    std::string name = std::string("power-mean-") + (star ? "gstar-" : "g-") +
                       (upper ? "upper" : "lower");
    std::vector<std::string> axes{"x", "alpha", "s", "beta1", "beta2", "lambda"};
    if (!upper) axes.push_back("r");
    auto ps = detail::record_params(p, axes);
    if (upper) {
        return detail::finish(name, ps, gm.value, mval, err);
    }
    return detail::finish(name, ps, mval, gm.value, err);
}

// Adjacent-pair monotonicity in beta: G nondecreasing, G* nonincreasing.
inline std::pair<InequalityReport, InequalityReport>
check_g_monotone_pair(const CheckParams& p, double tol = default_tol) {
    if (!(p.beta1 < p.beta2)) {
        throw std::domain_error("monotone-beta: needs beta1 < beta2");
    }
    const EvalResult ga = g({p.x, p.alpha, p.beta1}, p.s, tol);
    const EvalResult gb = g({p.x, p.alpha, p.beta2}, p.s, tol);
    const EvalResult sa = g_star({p.x, p.alpha, p.beta1}, p.s, tol);
    const EvalResult sb = g_star({p.x, p.alpha, p.beta2}, p.s, tol);
    auto ps = detail::record_params(p, {"x", "alpha", "s", "beta1", "beta2"});
    InequalityReport inc =
        detail::finish("monotone-beta-g", ps, ga.value, gb.value,
                       ga.abs_error_bound + gb.abs_error_bound);
    InequalityReport dec =
        detail::finish("monotone-beta-gstar", ps, sb.value, sa.value,
                       sa.abs_error_bound + sb.abs_error_bound);
    return {inc, dec};
}

// Full-grid form: reports for every adjacent pair along beta_grid.
inline std::vector<InequalityReport>
check_g_monotone_beta(double x, double alpha, double s,
                      const std::vector<double>& beta_grid,
                      double tol = default_tol) {
    std::vector<InequalityReport> out;
    for (std::size_t i = 0; i + 1 < beta_grid.size(); ++i) {
        CheckParams p;
        p.x = x;
        p.alpha = alpha;
        p.s = s;
        p.beta1 = beta_grid[i];
        p.beta2 = beta_grid[i + 1];
        auto pair = check_g_monotone_pair(p, tol);
        out.push_back(pair.first);
        out.push_back(pair.second);
    }
    return out;
}

// G(s) G(s') - G(s+s') >= 0, and the expanded complement form; the proof
// needs beta >= 0, enforced unless the caller overrides.
inline std::pair<InequalityReport, InequalityReport>
check_subadditivity(const CheckParams& p, double tol = default_tol,
                    bool allow_negative_beta = false) {
    if (!allow_negative_beta && p.beta < 0.0) {
        throw std::domain_error("subadditivity: beta must be >= 0 "
                                "(override flag to explore beta < 0)");
    }
    const VolterraParams vp{p.x, p.alpha, p.beta};
    const EvalResult ga = g(vp, p.s, tol);
    const EvalResult gb = g(vp, p.s2, tol);
    const EvalResult gab = g(vp, p.s + p.s2, tol);
    auto ps = detail::record_params(p, {"x", "alpha", "beta", "s", "s2"});

    const double e_prod = std::fabs(gb.value) * ga.abs_error_bound +
                          std::fabs(ga.value) * gb.abs_error_bound;
    InequalityReport direct =
        detail::finish("subadditivity-g", ps, gab.value, ga.value * gb.value,
                       e_prod + gab.abs_error_bound);

    const EvalResult ha = g_star(vp, p.s, tol);
    const EvalResult hb = g_star(vp, p.s2, tol);
    const EvalResult hab = g_star(vp, p.s + p.s2, tol);
    const double e_star = (1.0 + std::fabs(hb.value)) * ha.abs_error_bound +
                          (1.0 + std::fabs(ha.value)) * hb.abs_error_bound +
                          hab.abs_error_bound;
    InequalityReport expanded = detail::finish(
        "subadditivity-gstar", ps, ha.value + hb.value,
        hab.value + ha.value * hb.value, e_star);
    return {direct, expanded};
}

// ---------------------------------------------------------------------------
// registry and sweep driver
// ---------------------------------------------------------------------------

struct CheckInfo {
    std::string id;
    std::vector<std::string> axes; // parameters the check reads, caption order
    std::function<bool(const CheckParams&)> hypotheses;
    std::function<std::vector<InequalityReport>(const CheckParams&, double)> run;
};

inline const std::vector<CheckInfo>& checks() {
    using R = std::vector<InequalityReport>;
    static const double zstar = gammakit::gamma_min_abscissa;
    static const std::vector<CheckInfo> table = {
        {"geometric-convexity",
         {"x", "y", "lambda", "alpha", "beta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.y > 0 && p.lambda >= 0 && p.lambda <= 1 &&
                    p.alpha > -1 && p.beta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_geometric_convexity(p.x, p.y, p.lambda, p.alpha,
                                               p.beta, tol)};
         }},
        {"turan-alpha",
         {"x", "alpha", "beta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.beta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_turan_alpha({p.x, p.alpha, p.beta}, tol)};
         }},
        {"turan-beta",
         {"x", "alpha", "beta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.beta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             auto pr = check_turan_beta_bounds({p.x, p.alpha, p.beta}, tol);
             return {pr.first, pr.second};
         }},
        {"kimberling",
         {"x", "y"},
         [](const CheckParams& p) { return p.x > 0 && p.y > 0; },
         [](const CheckParams& p, double tol) -> R {
             auto pr = check_kimberling(p.x, p.y, tol);
             return {pr.first, pr.second};
         }},
        {"delta-n",
         {"n", "x", "alpha", "beta"},
         [](const CheckParams& p) {
             return p.n >= 1 && p.n % 2 == 1 && p.x > 0 && p.alpha > -1 &&
                    p.beta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_delta_n(p.n, {p.x, p.alpha, p.beta}, tol)};
         }},
        {"schur",
         {"n", "x", "alpha", "beta1", "beta2", "beta3"},
         [](const CheckParams& p) {
             return p.n >= 1 && p.n % 2 == 1 && p.x > 0 && p.alpha > -1 &&
                    p.beta1 > -1 && p.beta2 > -1 && p.beta3 > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_schur(p.n, p.x, p.alpha, p.beta1, p.beta2, p.beta3,
                                 tol)};
         }},
        {"logconcavity-mu-beta",
         {"x", "alpha", "m", "delta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.delta >= 0 &&
                    p.m - p.delta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_logconcavity(LogConcavityTarget::mu_in_beta, p, tol)};
         }},
        {"logconcavity-mu-alpha",
         {"x", "beta", "m", "delta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.beta > -1 && p.delta >= 0 &&
                    p.m - p.delta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_logconcavity(LogConcavityTarget::mu_in_alpha, p, tol)};
         }},
        {"logconcavity-g-beta",
         {"x", "alpha", "s", "m", "delta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.x < 1 && p.alpha > zstar && p.s > 0 &&
                    p.delta >= 0 && p.m - p.delta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_logconcavity(LogConcavityTarget::g_in_beta, p, tol)};
         }},
        {"logconcavity-gstar-beta",
         {"x", "alpha", "s", "m", "delta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.x < 1 && p.alpha > zstar && p.s > 0 &&
                    p.delta >= 0 && p.m - p.delta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_logconcavity(LogConcavityTarget::g_star_in_beta, p,
                                        tol)};
         }},
        {"logconvexity-h",
         {"x", "alpha", "m", "delta"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.delta >= 0 &&
                    p.m - p.delta > -1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_logconvexity_H(p, tol)};
         }},
        {"cm-mu-recip-x",
         {"x", "alpha", "beta", "h", "order"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha >= 0 && p.beta > -1 && p.h > 0 &&
                    p.order >= 0 && p.order <= 6;
         },
         [](const CheckParams& p, double tol) -> R {
             return check_complete_monotonicity(CmTarget::mu_recip_x, p, tol);
         }},
        {"cm-nu-neg-complement",
         {"x", "h", "order"},
         [](const CheckParams& p) {
             return p.x > 0 && p.h > 0 && p.order >= 0 && p.order <= 6;
         },
         [](const CheckParams& p, double tol) -> R {
             return check_complete_monotonicity(CmTarget::nu_neg_complement_t,
                                                p, tol);
         }},
        {"cm-exp-control",
         {"x", "h", "order"},
         [](const CheckParams& p) {
             return p.h > 0 && p.order >= 0 && p.order <= 6;
         },
         [](const CheckParams& p, double tol) -> R {
             return check_complete_monotonicity(CmTarget::exp_control, p, tol);
         }},
        {"power-mean-g-lower",
         {"x", "alpha", "s", "beta1", "beta2", "lambda", "r"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.s >= 0 && p.beta1 > -1 &&
                    p.beta2 > -1 && p.lambda > 0 && p.lambda < 1 && p.r <= 0;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_g_power_mean(false, false, p, tol)};
         }},
        {"power-mean-g-upper",
         {"x", "alpha", "s", "beta1", "beta2", "lambda"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.s >= 0 && p.beta1 > -1 &&
                    p.beta2 > -1 && p.lambda > 0 && p.lambda < 1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_g_power_mean(false, true, p, tol)};
         }},
        {"power-mean-gstar-lower",
         {"x", "alpha", "s", "beta1", "beta2", "lambda", "r"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.s >= 0 && p.beta1 > -1 &&
                    p.beta2 > -1 && p.lambda > 0 && p.lambda < 1 && p.r <= 0;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_g_power_mean(true, false, p, tol)};
         }},
        {"power-mean-gstar-upper",
         {"x", "alpha", "s", "beta1", "beta2", "lambda"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.s >= 0 && p.beta1 > -1 &&
                    p.beta2 > -1 && p.lambda > 0 && p.lambda < 1;
         },
         [](const CheckParams& p, double tol) -> R {
             return {check_g_power_mean(true, true, p, tol)};
         }},
        {"monotone-beta",
         {"x", "alpha", "s", "beta1", "beta2"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.s >= 0 && p.beta1 > -1 &&
                    p.beta1 < p.beta2;
         },
         [](const CheckParams& p, double tol) -> R {
             auto pr = check_g_monotone_pair(p, tol);
             return {pr.first, pr.second};
         }},
        {"subadditivity",
         {"x", "alpha", "beta", "s", "s2"},
         [](const CheckParams& p) {
             return p.x > 0 && p.alpha > -1 && p.beta >= 0 && p.s >= 0 &&
                    p.s2 >= 0;
         },
         [](const CheckParams& p, double tol) -> R {
             auto pr = check_subadditivity(p, tol);
             return {pr.first, pr.second};
         }},
    };
    return table;
}

inline const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : checks()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

// Per-axis value lists; axes the check does not read are ignored, missing
// axes keep the CheckParams default.
struct GridSpec {
    std::map<std::string, std::vector<double>> axes;
};

inline std::vector<CheckParams> expand_grid(const GridSpec& grid,
                                            const std::vector<std::string>& use_axes) {
    std::vector<std::string> active;
    for (const auto& a : use_axes) {
        auto it = grid.axes.find(a);
        if (it != grid.axes.end() && !it->second.empty()) active.push_back(a);
    }
    std::vector<CheckParams> points{CheckParams{}};
    for (const auto& axis : active) {
        const auto& values = grid.axes.at(axis);
        std::vector<CheckParams> next;
        next.reserve(points.size() * values.size());
        for (const auto& base : points) {
            for (double v : values) {
                CheckParams p = base;
                set_param(p, axis, v);
                next.push_back(p);
            }
        }
        points.swap(next);
    }
    return points;
}

// Run checks over explicit points; hypothesis-violating points are skipped.
// Points may run on several threads but reports always come back in point
// order, so the output is identical at any worker count.
inline std::vector<InequalityReport>
sweep_points(const std::vector<std::string>& ids,
             const std::vector<CheckParams>& points, double tol,
             int parallel = 1) {
    struct Job {
        const CheckInfo* check;
        const CheckParams* point;
    };
    std::vector<Job> jobs;
    for (const auto& id : ids) {
        const CheckInfo* info = find_check(id);
        if (!info) throw std::invalid_argument("unknown check id: " + id);
        for (const auto& pt : points) {
            if (info->hypotheses(pt)) jobs.push_back({info, &pt});
        }
    }

    std::vector<std::vector<InequalityReport>> results(jobs.size());
    if (parallel < 1) parallel = 1;
    const int workers = std::min<int>(parallel, int(jobs.size()) > 0 ? int(jobs.size()) : 1);
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = jobs[i].check->run(*jobs[i].point, tol);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<InequalityReport> flat;
    for (auto& group : results) {
        for (auto& rep : group) flat.push_back(std::move(rep));
    }
    return flat;
}

inline std::vector<InequalityReport> sweep(const GridSpec& grid,
                                           const std::vector<std::string>& ids,
                                           double tol, int parallel = 1) {
    std::vector<InequalityReport> all;
    for (const auto& id : ids) {
        const CheckInfo* info = find_check(id);
        if (!info) throw std::invalid_argument("unknown check id: " + id);
        auto points = expand_grid(grid, info->axes);
        auto part = sweep_points({id}, points, tol, parallel);
        for (auto& rep : part) all.push_back(std::move(rep));
    }
    return all;
}

} // namespace ineq
} // namespace volterra
