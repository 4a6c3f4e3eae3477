// Command-line frontend: evaluate any function of the library at a point,
// tabulate over grids, run the inequality verification sweeps, and
// regenerate the oracle golden values.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or domain error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volterra/volterra.hpp"

namespace {

using volterra::EvalResult;
using volterra::VolterraParams;
using volterra::ineq::CheckParams;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// function table for eval/table
// ---------------------------------------------------------------------------

struct FnInfo {
    const char* id;
    std::vector<std::string> axes;
    EvalResult (*eval)(const CheckParams&, double tol);
};

const std::vector<FnInfo>& functions() {
    static const std::vector<FnInfo> table = {
        {"nu", {"x"},
         [](const CheckParams& p, double tol) { return volterra::nu(p.x, tol); }},
        {"nu-alpha", {"x", "alpha"},
         [](const CheckParams& p, double tol) {
             return volterra::nu_alpha(p.x, p.alpha, tol);
         }},
        {"mu-beta", {"x", "beta"},
         [](const CheckParams& p, double tol) {
             return volterra::mu_beta(p.x, p.beta, tol);
         }},
        {"mu", {"x", "alpha", "beta"},
         [](const CheckParams& p, double tol) {
             return volterra::mu({p.x, p.alpha, p.beta}, tol);
         }},
        {"mu-upper", {"x", "alpha", "beta", "s"},
         [](const CheckParams& p, double tol) {
             return volterra::mu_upper({p.x, p.alpha, p.beta}, p.s, tol);
         }},
        {"mu-lower", {"x", "alpha", "beta", "s"},
         [](const CheckParams& p, double tol) {
             return volterra::mu_lower({p.x, p.alpha, p.beta}, p.s, tol);
         }},
        {"g", {"x", "alpha", "beta", "s"},
         [](const CheckParams& p, double tol) {
             return volterra::g({p.x, p.alpha, p.beta}, p.s, tol);
         }},
        {"g-star", {"x", "alpha", "beta", "s"},
         [](const CheckParams& p, double tol) {
             return volterra::g_star({p.x, p.alpha, p.beta}, p.s, tol);
         }},
        {"f-deriv", {"n", "x", "alpha", "beta"},
         [](const CheckParams& p, double tol) {
             return volterra::f_derivative(p.n, {p.x, p.alpha, p.beta}, tol);
         }},
        {"k-beta", {"x", "alpha", "beta"},
         [](const CheckParams& p, double tol) {
             return volterra::k_beta({p.x, p.alpha, p.beta}, tol);
         }},
        {"nu-neg", {"x"},
         [](const CheckParams& p, double tol) {
             return volterra::nu_neg(p.x, tol);
         }},
        {"nu-neg-complement", {"x"},
         [](const CheckParams& p, double tol) {
             return volterra::nu_neg_complement(p.x, tol);
         }},
        {"power-mean", {"r", "x", "y", "lambda"},
         [](const CheckParams& p, double tol) {
             (void)tol;
             const double v = volterra::means::power_mean(
                 volterra::means::PowerMeanOrder{p.r}, p.x, p.y, p.lambda);
             return EvalResult{v, 0.0, 1, true};
         }},
    };
    return table;
}

const FnInfo* find_function(const std::string& id) {
    for (const auto& f : functions()) {
        if (id == f.id) return &f;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// grids
// ---------------------------------------------------------------------------

struct AxisValues {
    std::map<std::string, std::vector<double>> values;
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) {
            throw std::domain_error("cannot parse number: " + item);
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::domain_error("empty value list");
    return out;
}

// grid file: CSV whose header names parameters, one point per row
std::vector<CheckParams> read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open grid file: " + path);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::domain_error("grid file is empty: " + path);
    }
    std::vector<std::string> names;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) names.push_back(cell);
    }
    for (const auto& n : names) {
        CheckParams probe;
        if (!volterra::ineq::set_param(probe, n, 0.0)) {
            throw std::domain_error("grid file names unknown parameter: " + n);
        }
    }
    std::vector<CheckParams> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        CheckParams p;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            if (col >= names.size()) {
                throw std::domain_error("grid row has too many columns");
            }
            volterra::ineq::set_param(p, names[col], std::stod(cell));
            ++col;
        }
        if (col != names.size()) {
            throw std::domain_error("grid row has too few columns");
        }
        points.push_back(p);
    }
    return points;
}

std::vector<CheckParams> expand_axes(const AxisValues& axes,
                                     const std::vector<std::string>& use_axes) {
    volterra::ineq::GridSpec grid;
    grid.axes = axes.values;
    return volterra::ineq::expand_grid(grid, use_axes);
}

// ---------------------------------------------------------------------------
// subcommand state
// ---------------------------------------------------------------------------

struct Options {
    std::string function_id;
    std::vector<std::string> check_ids;
    AxisValues axes;
    std::string grid_file;
    std::string format = "csv";
    std::string output;
    double tol = volterra::default_tol;
    int parallel = 1;
    bool list_checks = false;
};

void add_axis_options(CLI::App* cmd, Options& opt) {
    // flag name -> parameter name ("--step" avoids CLI11's built-in -h)
    static const char* axis_names[][2] = {
        {"x", "x"},         {"y", "y"},         {"alpha", "alpha"},
        {"beta", "beta"},   {"beta1", "beta1"}, {"beta2", "beta2"},
        {"beta3", "beta3"}, {"s", "s"},         {"s2", "s2"},
        {"lambda", "lambda"}, {"r", "r"},       {"m", "m"},
        {"delta", "delta"}, {"step", "h"},      {"n", "n"},
        {"order", "order"}};
    for (const auto& name : axis_names) {
        const char* param = name[1];
        cmd->add_option_function<std::string>(
            std::string("--") + name[0],
            [&opt, param](const std::string& text) {
                opt.axes.values[param] = parse_list(text);
            },
            std::string("value or comma list for ") + param);
    }
}

double env_default_tol() {
    if (const char* env = std::getenv("VOLTERRA_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring malformed VOLTERRA_TOL\n";
    }
    return volterra::default_tol;
}

CheckParams single_point(const Options& opt, const std::vector<std::string>& axes) {
    CheckParams p;
    for (const auto& a : axes) {
        auto it = opt.axes.values.find(a);
        if (it == opt.axes.values.end()) continue;
        if (it->second.size() != 1) {
            throw std::domain_error("eval takes a single value per parameter");
        }
        volterra::ineq::set_param(p, a, it->second.front());
    }
    return p;
}

// ---------------------------------------------------------------------------
// eval / table
// ---------------------------------------------------------------------------

int run_eval(const Options& opt) {
    const FnInfo* fn = find_function(opt.function_id);
    if (!fn) {
        std::cerr << "unknown function id: " << opt.function_id << "\n";
        return 2;
    }
    const CheckParams p = single_point(opt, fn->axes);
    const EvalResult r = fn->eval(p, opt.tol);
    std::cout << fmt(r.value) << "," << fmt(r.abs_error_bound) << "\n";
    return 0;
}

int run_table(const Options& opt) {
    const FnInfo* fn = find_function(opt.function_id);
    if (!fn) {
        std::cerr << "unknown function id: " << opt.function_id << "\n";
        return 2;
    }
    std::vector<CheckParams> points = opt.grid_file.empty()
                                          ? expand_axes(opt.axes, fn->axes)
                                          : read_grid_file(opt.grid_file);

    std::vector<EvalResult> rows(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        rows[i] = fn->eval(points[i], opt.tol);
    }

    if (opt.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::cout << (i ? ",\n " : "\n ") << "{";
            for (const auto& a : fn->axes) {
                std::cout << "\"" << a
                          << "\":" << fmt(volterra::ineq::get_param(points[i], a))
                          << ",";
            }
            std::cout << "\"value\":" << fmt(rows[i].value)
                      << ",\"abs_error_bound\":" << fmt(rows[i].abs_error_bound)
                      << "}";
        }
        std::cout << (points.empty() ? "]" : "\n]") << "\n";
    } else {
        for (const auto& a : fn->axes) std::cout << a << ",";
        std::cout << "value,abs_error_bound\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (const auto& a : fn->axes) {
                std::cout << fmt(volterra::ineq::get_param(points[i], a)) << ",";
            }
            std::cout << fmt(rows[i].value) << "," << fmt(rows[i].abs_error_bound)
                      << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const Options& opt) {
    using volterra::ineq::InequalityReport;

    if (opt.list_checks) {
        for (const auto& c : volterra::ineq::checks()) std::cout << c.id << "\n";
        return 0;
    }

    std::vector<std::string> ids = opt.check_ids;
    if (ids.empty()) ids = volterra::ineq::default_check_ids();
    for (const auto& id : ids) {
        if (!volterra::ineq::find_check(id)) {
            std::cerr << "unknown check id: " << id << "\n";
            return 2;
        }
    }

    std::vector<InequalityReport> reports;
    if (!opt.grid_file.empty()) {
        auto points = read_grid_file(opt.grid_file);
        reports = volterra::ineq::sweep_points(ids, points, opt.tol, opt.parallel);
    } else if (!opt.axes.values.empty()) {
        volterra::ineq::GridSpec grid;
        grid.axes = opt.axes.values;
        reports = volterra::ineq::sweep(grid, ids, opt.tol, opt.parallel);
    } else {
        for (const auto& id : ids) {
            auto pts = volterra::ineq::default_points(id);
            auto part = volterra::ineq::sweep_points({id}, pts, opt.tol,
                                                     opt.parallel);
            for (auto& rep : part) reports.push_back(std::move(rep));
        }
    }

    // union of parameter columns over the selected checks, stable order
    std::vector<std::string> columns;
    for (const auto& id : ids) {
        for (const auto& a : volterra::ineq::find_check(id)->axes) {
            bool seen = false;
            for (const auto& c : columns) {
                if (c == a) { seen = true; break; }
            }
            if (!seen) columns.push_back(a);
        }
    }

    std::cout << "check";
    for (const auto& c : columns) std::cout << "," << c;
    std::cout << ",lhs,rhs,margin,combined_error,verdict\n";

    long holds = 0, fails = 0, inconclusive = 0;
    for (const auto& rep : reports) {
        std::cout << rep.name;
        for (const auto& c : columns) {
            bool found = false;
            for (const auto& pv : rep.params) {
                if (pv.first == c) {
                    std::cout << "," << fmt(pv.second);
                    found = true;
                    break;
                }
            }
            if (!found) std::cout << ",";
        }
        std::cout << "," << fmt(rep.lhs) << "," << fmt(rep.rhs) << ","
                  << fmt(rep.margin) << "," << fmt(rep.combined_error) << ","
                  << volterra::ineq::to_string(rep.verdict) << "\n";
        switch (rep.verdict) {
            case volterra::ineq::Verdict::holds: ++holds; break;
            case volterra::ineq::Verdict::fails: ++fails; break;
            default: ++inconclusive; break;
        }
    }
    std::cerr << "verify: " << reports.size() << " reports, " << holds
              << " holds, " << inconclusive << " inconclusive, " << fails
              << " fails\n";
    return fails == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// golden
// ---------------------------------------------------------------------------

int run_golden(const Options& opt) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            std::cerr << "cannot open output file: " << opt.output << "\n";
            return 2;
        }
        out = &file;
    }

    const double inf = std::numeric_limits<double>::infinity();
    *out << "function-id,x,alpha,beta,s,value,bound\n";
    auto emit = [&](const char* id, double x, double alpha, double beta,
                    double s, const EvalResult& r) {
        *out << id << "," << fmt(x) << "," << fmt(alpha) << "," << fmt(beta)
             << "," << fmt(s) << "," << fmt(r.value) << ","
             << fmt(r.abs_error_bound) << "\n";
    };

    for (double x : {0.5, 1.0, 2.0}) {
        for (double alpha : {0.0, 1.0}) {
            for (double beta : {0.0, 1.0}) {
                const VolterraParams p{x, alpha, beta};
                emit("mu", x, alpha, beta, 0.0,
                     volterra::oracle::oracle_mu(p, 0.0, inf));
                emit("mu-lower", x, alpha, beta, 1.0,
                     volterra::oracle::oracle_mu(p, 0.0, 1.0));
                emit("mu-upper", x, alpha, beta, 1.0,
                     volterra::oracle::oracle_mu(p, 1.0, inf));
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volterra special functions: evaluation, tabulation and "
                 "inequality verification"};
    app.require_subcommand(1);

    Options opt;
    opt.tol = env_default_tol();

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->add_option("function", opt.function_id, "function id")->required();
    add_axis_options(eval, opt);
    eval->add_option("--tol", opt.tol, "absolute tolerance");

    CLI::App* table = app.add_subcommand("table", "tabulate a function over a grid");
    table->add_option("function", opt.function_id, "function id")->required();
    add_axis_options(table, opt);
    table->add_option("--grid", opt.grid_file, "CSV grid file (header names parameters)");
    table->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--tol", opt.tol, "absolute tolerance");

    CLI::App* verify = app.add_subcommand("verify", "run inequality checks");
    verify->add_option("checks", opt.check_ids, "check ids (default: standard battery)");
    add_axis_options(verify, opt);
    verify->add_option("--grid", opt.grid_file, "CSV grid file (header names parameters)");
    verify->add_option("--tol", opt.tol, "absolute tolerance");
    verify->add_option("--parallel", opt.parallel, "worker thread count")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--list", opt.list_checks, "list known check ids and exit");

    CLI::App* golden = app.add_subcommand("golden", "regenerate oracle golden values");
    golden->add_option("--out", opt.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(opt);
        if (table->parsed()) return run_table(opt);
        if (verify->parsed()) return run_verify(opt);
        if (golden->parsed()) return run_golden(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
