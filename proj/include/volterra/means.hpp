#pragma once

// Weighted two-point power means M_r(x1,x2;lambda) with the extended orders
// r = 0 (geometric), r = -inf (min), r = +inf (max).

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace volterra {
namespace means {

// Extended-real order: any finite double, or +/- infinity.
struct PowerMeanOrder {
    double r = 1.0;

    constexpr PowerMeanOrder() = default;
    constexpr PowerMeanOrder(double order) : r(order) {}

    static constexpr PowerMeanOrder geometric() { return PowerMeanOrder{0.0}; }
    static constexpr PowerMeanOrder min_order() {
        return PowerMeanOrder{-std::numeric_limits<double>::infinity()};
    }
    static constexpr PowerMeanOrder max_order() {
        return PowerMeanOrder{std::numeric_limits<double>::infinity()};
    }
};

inline double power_mean(PowerMeanOrder order, double x1, double x2,
                         double lambda) {
    if (!(x1 > 0.0) || !(x2 > 0.0) || !std::isfinite(x1) || !std::isfinite(x2)) {
        throw std::domain_error("power_mean: arguments must be positive and finite");
    }
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::domain_error("power_mean: lambda must lie in (0,1)");
    }
    if (std::isnan(order.r)) {
        throw std::domain_error("power_mean: order must not be NaN");
    }
    const double r = order.r;
    if (r == std::numeric_limits<double>::infinity()) return std::max(x1, x2);
    if (r == -std::numeric_limits<double>::infinity()) return std::min(x1, x2);
    // Near r = 0 the closed form cancels badly; switch to the limit formula.
    if (std::fabs(r) < 1e-8) {
        return std::exp(lambda * std::log(x1) + (1.0 - lambda) * std::log(x2));
    }
    // Factor out the larger argument so x^r cannot overflow.
    const double top = std::max(x1, x2);
    const double a = lambda * std::pow(x1 / top, r);
    const double b = (1.0 - lambda) * std::pow(x2 / top, r);
    return top * std::pow(a + b, 1.0 / r);
}

} // namespace means
} // namespace volterra
