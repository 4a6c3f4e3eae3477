#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "volterra/ineqlab.hpp"
#include "volterra/suite.hpp"

using namespace volterra;
using namespace volterra::ineq;

TEST_CASE("margins vanish exactly on degenerate inputs") {
    // lambda = 1: both sides are the same integral
    auto rep = check_geometric_convexity(1.0, 4.0, 1.0, 0.0, 0.0);
    CHECK(rep.margin == 0.0);
    // x = y
    rep = check_geometric_convexity(2.0, 2.0, 0.3, 0.0, 0.0);
    CHECK(rep.margin == 0.0);
    // delta = 0 midpoint probes
    CheckParams p;
    p.x = 1.0;
    p.alpha = 0.0;
    p.m = 1.0;
    p.delta = 0.0;
    CHECK(check_logconcavity(LogConcavityTarget::mu_in_beta, p).margin == 0.0);
    CHECK(check_logconvexity_H(p).margin == 0.0);
    // equal betas in the Schur form
    auto schur = check_schur(1, 1.0, 0.0, 0.7, 0.7, 0.7);
    CHECK(schur.margin == 0.0);
}

TEST_CASE("geometric convexity holds at the stated points") {
    auto rep = check_geometric_convexity(1.0, 4.0, 0.5, 0.0, 0.0);
    CHECK(rep.verdict != Verdict::fails);
    CHECK(rep.margin >= -rep.combined_error);
}

TEST_CASE("turan in alpha holds at the stated points") {
    CHECK(check_turan_alpha({1.0, 0.0, 0.0}).verdict == Verdict::holds);
    CHECK(check_turan_alpha({0.3, -0.5, 2.0}).verdict == Verdict::holds);
}

TEST_CASE("turan-beta double bound and internal consistency") {
    for (const VolterraParams& p :
         {VolterraParams{1.0, 0.0, 0.0}, VolterraParams{2.0, 1.0, -0.5}}) {
        auto pr = check_turan_beta_bounds(p);
        CHECK(pr.first.verdict != Verdict::fails);
        CHECK(pr.second.verdict != Verdict::fails);
        // upper-bound margin equals rhs/(beta+2) minus the lower difference
        const double recon = pr.second.rhs - pr.first.margin;
        CHECK(std::fabs(pr.second.margin - recon) <=
              1e-12 * std::max(1.0, std::fabs(recon)));
    }
}

TEST_CASE("kimberling forms agree in verdict and sign") {
    for (double x : {0.1, 1.0}) {
        for (double y : {0.1, 0.5, 2.0}) {
            auto pr = check_kimberling(x, y);
            CHECK(pr.first.verdict == pr.second.verdict);
            CHECK(pr.first.margin * pr.second.margin >= 0.0);
            CHECK(pr.first.verdict != Verdict::fails);
            // the margins are algebraically identical
            CHECK(std::fabs(pr.first.margin - pr.second.margin) <=
                  1e-12 + 1e-9 * std::fabs(pr.first.margin));
        }
    }
}

TEST_CASE("kimberling x -> 0 limit degenerates") {
    auto pr = check_kimberling(1e-7, 1.0);
    // f(0+) = 1, so f(y) - f(0)f(y) ~ 0 at the scale of 1 - f(1e-7)
    CHECK(std::fabs(pr.first.margin) < 0.1);
}

TEST_CASE("delta-n two assembly routes agree") {
    const VolterraParams p{1.0, 0.0, 0.0};
    auto direct = check_delta_n(1, p);
    auto d0 = f_derivative(0, p);
    auto k = k_beta(p);
    const double via_k = k.value * d0.value * d0.value;
    CHECK(std::fabs(direct.margin - via_k) <=
          direct.combined_error +
              k.abs_error_bound * d0.value * d0.value +
              2.0 * k.value * d0.value * d0.abs_error_bound);
    CHECK(direct.verdict == Verdict::holds);
    CHECK(check_delta_n(3, {0.5, 1.0, 0.5}).verdict == Verdict::holds);
    CHECK_THROWS_AS(check_delta_n(2, p), std::domain_error);
}

TEST_CASE("schur holds and is permutation invariant") {
    auto a = check_schur(1, 1.0, 0.0, 0.0, 1.0, 2.0);
    auto b = check_schur(1, 1.0, 0.0, 2.0, 0.0, 1.0);
    CHECK(a.verdict != Verdict::fails);
    CHECK(b.verdict == a.verdict);
    CHECK(std::fabs(a.margin - b.margin) <=
          1e-10 * std::max(1.0, std::fabs(a.margin)));
}

TEST_CASE("log-concavity and log-convexity probes hold at stated points") {
    CheckParams p;
    p.x = 1.0;
    p.alpha = 0.0;
    p.m = 1.0;
    p.delta = 1.0;
    CHECK(check_logconcavity(LogConcavityTarget::mu_in_beta, p).verdict ==
          Verdict::holds);
    p.m = 0.0;
    p.delta = 0.5; // m - delta must stay above -1
    CHECK(check_logconvexity_H(p).verdict == Verdict::holds);
    CheckParams q;
    q.x = 0.5;
    q.alpha = 2.0;
    q.s = 1.0;
    q.m = 0.5;
    q.delta = 0.5;
    CHECK(check_logconcavity(LogConcavityTarget::g_in_beta, q).verdict !=
          Verdict::fails);
    CHECK(check_logconcavity(LogConcavityTarget::g_star_in_beta, q).verdict !=
          Verdict::fails);
}

TEST_CASE("logconvexity-h sign agrees with k_beta as delta shrinks") {
    CheckParams p;
    p.x = 1.0;
    p.alpha = 0.0;
    p.m = 0.5;
    auto k = k_beta({p.x, p.alpha, p.m});
    CHECK(k.value > 0.0);
    for (double d : {0.1, 0.05, 0.025}) {
        p.delta = d;
        auto rep = check_logconvexity_H(p);
        CHECK(rep.margin >= -rep.combined_error);
    }
}

TEST_CASE("complete monotonicity checks") {
    CheckParams p;
    p.x = 0.5;
    p.h = 0.1;
    p.order = 4;
    // analytic control passes with margin exactly nonnegative
    for (const auto& rep :
         check_complete_monotonicity(CmTarget::exp_control, p)) {
        CHECK(rep.margin >= 0.0);
        CHECK(rep.combined_error == 0.0);
    }
    p.alpha = 0.0;
    p.beta = 0.0;
    for (const auto& rep :
         check_complete_monotonicity(CmTarget::mu_recip_x, p)) {
        CHECK(rep.verdict != Verdict::fails);
    }
    p.x = 0.2;
    for (const auto& rep :
         check_complete_monotonicity(CmTarget::nu_neg_complement_t, p)) {
        CHECK(rep.verdict != Verdict::fails);
    }
    p.alpha = -0.5;
    CHECK_THROWS_AS(check_complete_monotonicity(CmTarget::mu_recip_x, p),
                    std::domain_error);
}

TEST_CASE("power-mean sandwich at a stated point") {
    CheckParams p;
    p.x = 0.5;
    p.alpha = 2.0;
    p.s = 1.0;
    p.beta1 = 0.0;
    p.beta2 = 1.0;
    p.lambda = 0.3;
    p.r = 0.0;
    auto lower = check_g_power_mean(false, false, p);
    CHECK(lower.verdict != Verdict::fails);
    auto upper = check_g_power_mean(false, true, p);
    CHECK(upper.verdict != Verdict::fails);
    auto lower_star = check_g_power_mean(true, false, p);
    CHECK(lower_star.verdict != Verdict::fails);
    // degenerate equal betas
    p.beta2 = p.beta1;
    auto deg = check_g_power_mean(false, false, p);
    CHECK(std::fabs(deg.margin) <= deg.combined_error + 1e-12);
    // positive order rejected for the lower bound
    p.r = 0.5;
    CHECK_THROWS_AS(check_g_power_mean(false, false, p), std::domain_error);
}

TEST_CASE("power-mean lower bound is violated for r > 0 at small s") {
    // exploratory mode: the sharpness direction of the sandwich. For the
    // lower-incomplete ratio, G*_{beta} ~ s^{beta+1}, so for r > 0 the
    // r-mean of G*_{0}, G*_{2} dominates G*_{1} once s is small; this is why
    // the bound can only be stated for r <= 0.
    const double x = 0.5, alpha = 2.0, lambda = 0.5;
    bool violated = false;
    for (double s : {0.05, 0.02, 0.01}) {
        auto g1 = g_star({x, alpha, 0.0}, s);
        auto g2 = g_star({x, alpha, 2.0}, s);
        auto gm = g_star({x, alpha, 1.0}, s);
        const double m = means::power_mean(2.0, g1.value, g2.value, lambda);
        if (gm.value - m < -(g1.abs_error_bound + g2.abs_error_bound +
                             gm.abs_error_bound)) {
            violated = true;
        }
    }
    CHECK(violated);
}

TEST_CASE("monotone-beta pairs") {
    CheckParams p;
    p.x = 0.5;
    p.alpha = 2.0;
    p.s = 1.0;
    p.beta1 = -0.5;
    p.beta2 = 0.0;
    auto pr = check_g_monotone_pair(p);
    CHECK(pr.first.verdict != Verdict::fails);
    CHECK(pr.second.verdict != Verdict::fails);
    // s = 0: g identically 1, margins exactly zero
    p.s = 0.0;
    pr = check_g_monotone_pair(p);
    CHECK(pr.first.margin == 0.0);
    CHECK(pr.second.margin == 0.0);
    // full grid form emits a pair of reports per adjacent step
    auto reps = check_g_monotone_beta(0.5, 2.0, 1.0, {-0.5, 0.0, 0.5, 1.0, 2.0});
    CHECK(reps.size() == 8);
    for (const auto& rep : reps) CHECK(rep.verdict != Verdict::fails);
    CHECK_THROWS_AS(check_g_monotone_pair([] {
                        CheckParams q;
                        q.beta1 = 1.0;
                        q.beta2 = 0.0;
                        return q;
                    }()),
                    std::domain_error);
}

TEST_CASE("subadditivity margins and symmetry") {
    CheckParams p;
    p.x = 0.5;
    p.alpha = 1.0;
    p.beta = 1.0;
    p.s = 0.5;
    p.s2 = 0.7;
    auto pr = check_subadditivity(p);
    CHECK(pr.first.verdict != Verdict::fails);
    CHECK(pr.second.verdict != Verdict::fails);
    // swapping s and s2 gives bitwise-identical margins
    CheckParams q = p;
    q.s = p.s2;
    q.s2 = p.s;
    auto pr2 = check_subadditivity(q);
    CHECK(pr.first.margin == pr2.first.margin);
    CHECK(pr.second.margin == pr2.second.margin);
    // s = 0 degenerates to zero margin
    p.s = 0.0;
    pr = check_subadditivity(p);
    CHECK(std::fabs(pr.first.margin) <= pr.first.combined_error + 1e-12);
    // beta < 0 is rejected unless overridden
    p.beta = -0.5;
    CHECK_THROWS_AS(check_subadditivity(p), std::domain_error);
    CHECK_NOTHROW(check_subadditivity(p, default_tol, true));
}

TEST_CASE("verdict stability under tighter tolerance") {
    const VolterraParams p{1.0, 0.0, 0.0};
    auto coarse = check_turan_alpha(p, 1e-7);
    auto fine = check_turan_alpha(p, 1e-9);
    auto finest = check_turan_alpha(p, 1e-10);
    CHECK(coarse.verdict == Verdict::holds);
    CHECK(fine.verdict == Verdict::holds);
    CHECK(finest.verdict == Verdict::holds);
    CHECK(fine.combined_error <= coarse.combined_error);

    // a 10x tighter tolerance may resolve inconclusive but never flips
    // holds <-> fails
    auto pts = default_points("kimberling");
    auto loose = sweep_points({"kimberling"}, pts, 1e-8);
    auto tight = sweep_points({"kimberling"}, pts, 1e-9);
    REQUIRE(loose.size() == tight.size());
    for (std::size_t i = 0; i < loose.size(); ++i) {
        if (loose[i].verdict == Verdict::holds) {
            CHECK(tight[i].verdict != Verdict::fails);
        }
        if (loose[i].verdict == Verdict::fails) {
            CHECK(tight[i].verdict != Verdict::holds);
        }
    }
}

TEST_CASE("sweep filters hypotheses") {
    GridSpec grid;
    grid.axes["x"] = {0.5, 2.0};       // x = 2 violates 0 < x < 1
    grid.axes["alpha"] = {0.0, 2.0};   // alpha = 0 violates alpha > z*
    grid.axes["s"] = {1.0};
    grid.axes["m"] = {0.0};
    grid.axes["delta"] = {0.5};
    auto reports = sweep(grid, {"logconcavity-g-beta"}, default_tol);
    CHECK(reports.size() == 1); // only (x=0.5, alpha=2) survives
    CHECK(reports[0].params[0].second == 0.5);
    CHECK(reports[0].params[1].second == 2.0);

    // m - delta <= -1 is filtered
    grid.axes["m"] = {0.0};
    grid.axes["delta"] = {1.0};
    CHECK(sweep(grid, {"logconcavity-g-beta"}, default_tol).empty());
}

TEST_CASE("sweep determinism across worker counts") {
    auto pts = default_points("kimberling");
    auto serial = sweep_points({"kimberling"}, pts, default_tol, 1);
    auto threaded = sweep_points({"kimberling"}, pts, default_tol, 8);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].name == threaded[i].name);
        CHECK(serial[i].margin == threaded[i].margin);
        CHECK(serial[i].combined_error == threaded[i].combined_error);
    }
}

TEST_CASE("sweep edge cases") {
    CHECK(sweep_points({"turan-alpha"}, {}, default_tol).empty());
    CheckParams p;
    p.x = 1.0;
    auto one = sweep_points({"turan-alpha"}, {p}, default_tol);
    REQUIRE(one.size() == 1);
    auto direct = check_turan_alpha({p.x, p.alpha, p.beta});
    CHECK(one[0].margin == direct.margin);
    CHECK_THROWS_AS(sweep_points({"no-such-check"}, {p}, default_tol),
                    std::invalid_argument);
}

TEST_CASE("report verdict classification bands") {
    CHECK(classify(1.0, 0.5) == Verdict::holds);
    CHECK(classify(-1.0, 0.5) == Verdict::fails);
    CHECK(classify(0.3, 0.5) == Verdict::inconclusive);
    CHECK(classify(-0.3, 0.5) == Verdict::inconclusive);
}
