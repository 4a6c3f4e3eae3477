#pragma once

// Built-in verification grids: the parameter points `volterra verify` sweeps
// for each check when no explicit grid is given. Random pieces (the Schur
// triples) use a fixed seed so two runs are byte-identical.

#include <random>
#include <string>
#include <vector>

#include "ineqlab.hpp"

namespace volterra {
namespace ineq {

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        out.push_back(lo + (hi - lo) * i / double(count - 1));
    }
    return out;
}

inline std::vector<CheckParams> product(const GridSpec& grid,
                                        const std::vector<std::string>& axes) {
    return expand_grid(grid, axes);
}

} // namespace detail

inline std::vector<CheckParams> default_points(const std::string& id) {
    GridSpec grid;
    if (id == "turan-alpha" || id == "turan-beta") {
        grid.axes["x"] = {0.3, 1.0, 2.0, 5.0};
        grid.axes["alpha"] = {-0.5, 0.0, 1.0, 3.0};
        grid.axes["beta"] = {-0.5, 0.0, 1.0, 2.5};
        return detail::product(grid, {"x", "alpha", "beta"});
    }
    if (id == "delta-n") {
        grid.axes["n"] = {1, 3, 5};
        grid.axes["x"] = {0.5, 1.0, 2.0};
        grid.axes["alpha"] = {0.0, 1.0};
        grid.axes["beta"] = {-0.5, 0.0, 1.0};
        return detail::product(grid, {"n", "x", "alpha", "beta"});
    }
    if (id == "schur") {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> dist(-0.9, 3.0);
        std::vector<CheckParams> pts;
        for (int i = 0; i < 20; ++i) {
            const double b1 = dist(rng), b2 = dist(rng), b3 = dist(rng);
            for (double x : {0.5, 1.0}) {
                for (double alpha : {0.0, 1.0}) {
                    CheckParams p;
                    p.n = 1;
                    p.x = x;
                    p.alpha = alpha;
                    p.beta1 = b1;
                    p.beta2 = b2;
                    p.beta3 = b3;
                    pts.push_back(p);
                }
            }
        }
        return pts;
    }
    if (id == "kimberling") {
        grid.axes["x"] = {0.1, 0.5, 1.0, 2.0};
        grid.axes["y"] = {0.1, 0.5, 1.0, 2.0};
        return detail::product(grid, {"x", "y"});
    }
    if (id == "logconcavity-mu-beta" || id == "logconvexity-h") {
        grid.axes["x"] = {0.5, 1.0, 2.0};
        grid.axes["alpha"] = {0.0, 1.0};
        grid.axes["m"] = {0.0, 1.0};
        grid.axes["delta"] = {0.25, 0.5, 1.0};
        return detail::product(grid, {"x", "alpha", "m", "delta"});
    }
    if (id == "logconcavity-mu-alpha") {
        grid.axes["x"] = {0.5, 1.0, 2.0};
        grid.axes["beta"] = {0.0, 1.0};
        grid.axes["m"] = {0.0, 1.0};
        grid.axes["delta"] = {0.25, 0.5, 1.0};
        return detail::product(grid, {"x", "beta", "m", "delta"});
    }
    if (id == "logconcavity-g-beta" || id == "logconcavity-gstar-beta") {
        grid.axes["x"] = {0.3, 0.5, 0.8};
        grid.axes["alpha"] = {1.5, 2.0, 3.0};
        grid.axes["s"] = {0.5, 1.0, 2.0};
        grid.axes["m"] = {0.0, 1.0};
        grid.axes["delta"] = {0.25, 0.5};
        return detail::product(grid, {"x", "alpha", "s", "m", "delta"});
    }
    if (id.rfind("power-mean-", 0) == 0) {
        std::vector<CheckParams> pts;
        const double pairs[2][2] = {{0.0, 1.0}, {-0.5, 2.0}};
        for (const auto& pair : pairs) {
            grid = GridSpec{};
            grid.axes["x"] = {0.3, 0.5, 0.8};
            grid.axes["alpha"] = {1.5, 2.0, 3.0};
            grid.axes["s"] = {0.5, 1.0, 2.0};
            grid.axes["lambda"] = {0.25, 0.5, 0.75};
            for (auto p : detail::product(grid, {"x", "alpha", "s", "lambda"})) {
                p.beta1 = pair[0];
                p.beta2 = pair[1];
                p.r = 0.0;
                pts.push_back(p);
            }
        }
        return pts;
    }
    if (id == "monotone-beta") {
        const double beta_grid[5] = {-0.5, 0.0, 0.5, 1.0, 2.0};
        const double alpha_s[3][2] = {{0.0, 0.5}, {1.0, 1.0}, {2.0, 2.0}};
        std::vector<CheckParams> pts;
        for (double x : {0.5, 1.0, 2.0}) {
            for (const auto& as : alpha_s) {
                for (int i = 0; i + 1 < 5; ++i) {
                    CheckParams p;
                    p.x = x;
                    p.alpha = as[0];
                    p.s = as[1];
                    p.beta1 = beta_grid[i];
                    p.beta2 = beta_grid[i + 1];
                    pts.push_back(p);
                }
            }
        }
        return pts;
    }
    if (id == "subadditivity") {
        grid.axes["x"] = {0.3, 0.7};
        grid.axes["alpha"] = {0.0, 2.0};
        grid.axes["beta"] = {0.0, 1.0, 2.0};
        grid.axes["s"] = {0.0, 0.3, 0.7, 1.5};
        grid.axes["s2"] = {0.3, 0.7, 1.5};
        return detail::product(grid, {"x", "alpha", "beta", "s", "s2"});
    }
    if (id == "cm-mu-recip-x") {
        grid.axes["x"] = detail::linspace(0.5, 3.0, 10);
        grid.axes["alpha"] = {0.0, 1.0};
        grid.axes["beta"] = {0.0, 1.0};
        grid.axes["h"] = {0.1};
        grid.axes["order"] = {4};
        return detail::product(grid, {"x", "alpha", "beta", "h", "order"});
    }
    if (id == "cm-nu-neg-complement" || id == "cm-exp-control") {
        grid.axes["x"] = detail::linspace(0.2, 5.0, 10);
        grid.axes["h"] = {0.1};
        grid.axes["order"] = {4};
        return detail::product(grid, {"x", "h", "order"});
    }
    if (id == "geometric-convexity") {
        grid.axes["x"] = {0.5, 1.0, 2.0};
        grid.axes["y"] = {0.5, 1.0, 4.0};
        grid.axes["lambda"] = {0.25, 0.5, 1.0};
        grid.axes["alpha"] = {0.0, 1.0};
        grid.axes["beta"] = {0.0, 1.0};
        return detail::product(grid, {"x", "y", "lambda", "alpha", "beta"});
    }
    return {};
}

// Checks swept by default: the standard inequality battery.
inline const std::vector<std::string>& default_check_ids() {
    static const std::vector<std::string> ids = {
        "turan-alpha",
        "turan-beta",
        "delta-n",
        "schur",
        "kimberling",
        "logconcavity-mu-beta",
        "logconcavity-mu-alpha",
        "logconvexity-h",
        "logconcavity-g-beta",
        "logconcavity-gstar-beta",
        "power-mean-g-lower",
        "power-mean-g-upper",
        "power-mean-gstar-lower",
        "power-mean-gstar-upper",
        "monotone-beta",
        "subadditivity",
    };
    return ids;
}

// Default battery over the built-in grids, in deterministic order.
inline std::vector<InequalityReport>
run_default_suite(const std::vector<std::string>& ids, double tol,
                  int parallel = 1) {
    std::vector<InequalityReport> all;
    for (const auto& id : ids) {
        auto pts = default_points(id);
        auto part = sweep_points({id}, pts, tol, parallel);
        for (auto& rep : part) all.push_back(std::move(rep));
    }
    return all;
}

} // namespace ineq
} // namespace volterra
