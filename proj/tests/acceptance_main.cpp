// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria follow the project contract: quadrature results
// certified against the independent oracle, every proved inequality swept
// over its grid with zero `fails` verdicts, and the CLI honoring its
// determinism and exit-code contract.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "volterra/volterra.hpp"

using namespace volterra;
using ineq::CheckParams;
using ineq::InequalityReport;
using ineq::Verdict;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %02d %-24s %s\n", pass ? "PASS" : "FAIL", id,
                name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct SweepTally {
    long total = 0;
    long fails = 0;
    std::string first_fail;
};

SweepTally tally(const std::vector<InequalityReport>& reports) {
    SweepTally t;
    for (const auto& rep : reports) {
        ++t.total;
        if (rep.verdict == Verdict::fails) {
            ++t.fails;
            if (t.first_fail.empty()) {
                std::ostringstream os;
                os << rep.name << " at";
                for (const auto& pv : rep.params) {
                    os << " " << pv.first << "=" << pv.second;
                }
                os << " margin=" << rep.margin;
                t.first_fail = os.str();
            }
        }
    }
    return t;
}

SweepTally run_default(const std::string& id) {
    return tally(ineq::sweep_points({id}, ineq::default_points(id),
                                    default_tol, 4));
}

std::string grid_summary(const SweepTally& t) {
    std::ostringstream os;
    os << t.total << " reports, " << t.fails << " fails";
    if (t.fails > 0) os << "; first: " << t.first_fail;
    return os.str();
}

struct CliRun {
    std::string out;
    int exit_code = -1;
};

CliRun run_cli(const std::string& args) {
    CliRun res;
    std::string path = VOLTERRA_CLI_PATH;
    if (const char* env = std::getenv("VOLTERRA_CLI_BIN")) path = env;
    const std::string cmd = path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[8192];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// --- criteria ---------------------------------------------------------------

void criterion_oracle_equivalence() {
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> xs(0.1, 5.0), as(-0.9, 3.0),
        bs(-0.9, 3.0), ss(0.0, 5.0);
    int disagreements = 0;
    for (int i = 0; i < 60; ++i) {
        const VolterraParams p{xs(rng), as(rng), bs(rng)};
        const double s = std::max(ss(rng), 1e-6);
        const auto q_mu = mu(p);
        const auto o_mu = oracle::oracle_mu(p, 0.0, inf);
        if (std::fabs(q_mu.value - o_mu.value) >
            q_mu.abs_error_bound + o_mu.abs_error_bound) ++disagreements;
        const auto q_up = mu_upper(p, s);
        const auto o_up = oracle::oracle_mu(p, s, inf);
        if (std::fabs(q_up.value - o_up.value) >
            q_up.abs_error_bound + o_up.abs_error_bound) ++disagreements;
        const auto q_lo = mu_lower(p, s);
        const auto o_lo = oracle::oracle_mu(p, 0.0, s);
        if (std::fabs(q_lo.value - o_lo.value) >
            q_lo.abs_error_bound + o_lo.abs_error_bound) ++disagreements;
    }
    std::ostringstream os;
    os << "60 tuples x {mu, mu_upper, mu_lower}, " << disagreements
       << " outside summed bounds";
    report(1, "oracle-equivalence", disagreements == 0, os.str());
}

void criterion_complementarity() {
    std::mt19937_64 rng(271828);
    std::uniform_real_distribution<double> xs(0.1, 5.0), as(-0.9, 3.0),
        bs(-0.9, 3.0), ss(0.0, 5.0);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        const VolterraParams p{xs(rng), as(rng), bs(rng)};
        const double s = ss(rng);
        const auto gu = g(p, s);
        const auto gl = g_star(p, s);
        if (std::fabs(gu.value + gl.value - 1.0) >
            gu.abs_error_bound + gl.abs_error_bound) ++bad;
    }
    std::ostringstream os;
    os << "100 tuples, " << bad << " outside combined error";
    report(2, "complementarity", bad == 0, os.str());
}

void criterion_turan_alpha() {
    const SweepTally t = run_default("turan-alpha");
    report(3, "turan-alpha", t.fails == 0 && t.total == 64, grid_summary(t));
}

void criterion_turan_beta() {
    const SweepTally t = run_default("turan-beta");
    report(4, "turan-beta-bounds", t.fails == 0 && t.total == 128,
           grid_summary(t));
}

void criterion_delta_n() {
    const SweepTally t = run_default("delta-n");
    report(5, "delta-n-turan", t.fails == 0 && t.total == 54, grid_summary(t));
}

void criterion_schur() {
    const SweepTally t = run_default("schur");
    report(6, "schur", t.fails == 0 && t.total == 80, grid_summary(t));
}

void criterion_kimberling() {
    SweepTally t = run_default("kimberling");
    bool range_ok = true;
    for (double x : {0.1, 0.5, 1.0, 2.0}) {
        const auto c = nu_neg_complement(x);
        if (!(c.value > 0.0 && c.value < 1.0)) range_ok = false;
    }
    const auto near_zero = nu_neg_complement(1e-6);
    const bool limit_ok = std::fabs(near_zero.value - 1.0) <= 1e-3;
    std::ostringstream os;
    os << grid_summary(t) << "; range(0,1) " << (range_ok ? "ok" : "VIOLATED")
       << "; f(1e-6)=" << near_zero.value
       << (limit_ok ? " within 1e-3 of 1" : " NOT within 1e-3 of 1");
    report(7, "kimberling", t.fails == 0 && range_ok && limit_ok, os.str());
}

void criterion_log_shape() {
    long total = 0, fails = 0;
    std::string first;
    for (const char* id :
         {"logconcavity-mu-beta", "logconcavity-mu-alpha", "logconvexity-h",
          "logconcavity-g-beta", "logconcavity-gstar-beta"}) {
        const SweepTally t = run_default(id);
        total += t.total;
        fails += t.fails;
        if (first.empty()) first = t.first_fail;
    }
    std::ostringstream os;
    os << total << " reports, " << fails << " fails";
    if (fails) os << "; first: " << first;
    report(8, "log-concavity/convexity", fails == 0, os.str());
}

void criterion_power_mean() {
    long total = 0, fails = 0;
    for (const char* id : {"power-mean-g-lower", "power-mean-g-upper",
                           "power-mean-gstar-lower", "power-mean-gstar-upper"}) {
        const SweepTally t = run_default(id);
        total += t.total;
        fails += t.fails;
    }
    std::ostringstream os;
    os << total << " reports, " << fails << " fails";
    report(9, "power-mean-sandwich", fails == 0, os.str());
}

void criterion_monotone_beta() {
    const SweepTally t = run_default("monotone-beta");
    report(10, "monotone-in-beta", t.fails == 0 && t.total == 72,
           grid_summary(t));
}

void criterion_subadditivity() {
    auto reports = ineq::sweep_points({"subadditivity"},
                                      ineq::default_points("subadditivity"),
                                      default_tol, 4);
    const SweepTally t = tally(reports);
    bool zero_at_origin = true;
    for (const auto& rep : reports) {
        double s = 0.0;
        for (const auto& pv : rep.params) {
            if (pv.first == "s") s = pv.second;
        }
        if (s == 0.0 && std::fabs(rep.margin) > rep.combined_error + 1e-12) {
            zero_at_origin = false;
        }
    }
    std::ostringstream os;
    os << grid_summary(t) << "; s=0 margins "
       << (zero_at_origin ? "vanish" : "DO NOT vanish");
    report(11, "subadditivity", t.fails == 0 && zero_at_origin, os.str());
}

void criterion_complete_monotonicity() {
    long total = 0, fails = 0;
    bool control_exact = true;
    for (const char* id :
         {"cm-mu-recip-x", "cm-nu-neg-complement", "cm-exp-control"}) {
        auto reports = ineq::sweep_points({id}, ineq::default_points(id),
                                          default_tol, 4);
        for (const auto& rep : reports) {
            ++total;
            if (rep.verdict == Verdict::fails) ++fails;
            if (std::string(id) == "cm-exp-control" && rep.margin < 0.0) {
                control_exact = false;
            }
        }
    }
    std::ostringstream os;
    os << total << " alternating-difference reports, " << fails
       << " fails; analytic control "
       << (control_exact ? "nonnegative" : "VIOLATED");
    report(12, "complete-monotonicity", fails == 0 && control_exact, os.str());
}

void criterion_means() {
    bool ok = true;
    for (double r : {-inf, -2.0, 0.0, 0.5, 1.0, 3.0, inf}) {
        if (std::fabs(means::power_mean(r, 2.5, 2.5, 0.4) - 2.5) > 1e-13) ok = false;
    }
    std::mt19937_64 rng(1618);
    std::uniform_real_distribution<double> vals(0.05, 20.0), lam(0.05, 0.95);
    const double orders[] = {-inf, -4.0, -1.0, 0.0, 0.5, 1.0, 2.0, 7.0, inf};
    for (int i = 0; i < 20; ++i) {
        const double a = vals(rng), b = vals(rng), l = lam(rng);
        double prev = 0.0;
        for (double r : orders) {
            const double m = means::power_mean(r, a, b, l);
            if (m < prev * (1.0 - 1e-12)) ok = false;
            prev = m;
        }
    }
    const double g0 = means::power_mean(0.0, 3.0, 7.0, 0.25);
    if (std::fabs(means::power_mean(1e-8, 3.0, 7.0, 0.25) - g0) > 1e-6 * g0) ok = false;
    report(13, "means-unit-suite", ok,
           "idempotence, 20x order-monotonicity, continuity at r=0");
}

void criterion_cli_contract() {
    const CliRun serial = run_cli("verify --parallel 1");
    const CliRun threaded = run_cli("verify --parallel 8");
    const bool identical = serial.out == threaded.out;
    const bool exit_ok = serial.exit_code == 0 && threaded.exit_code == 0;
    std::ostringstream os;
    os << "exit codes " << serial.exit_code << "/" << threaded.exit_code
       << ", outputs " << (identical ? "byte-identical" : "DIFFER") << " ("
       << serial.out.size() << " bytes)";
    report(14, "cli-contract", exit_ok && identical, os.str());
}

} // namespace

int main() {
    criterion_oracle_equivalence();
    criterion_complementarity();
    criterion_turan_alpha();
    criterion_turan_beta();
    criterion_delta_n();
    criterion_schur();
    criterion_kimberling();
    criterion_log_shape();
    criterion_power_mean();
    criterion_monotone_beta();
    criterion_subadditivity();
    criterion_complete_monotonicity();
    criterion_means();
    criterion_cli_contract();
    std::printf("%d of 14 criteria failed\n", failures);
    return failures;
}
