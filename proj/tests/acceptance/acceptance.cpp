// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here and
// applied to the measured values, independent of the thresholds inside the
// experiment reports. Optional arguments select criteria by number.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/harness/experiments.hpp"
#include "gsqg/harness/probes.hpp"
#include "gsqg/multipliers/admissibility.hpp"
#include "gsqg/solver/run.hpp"
#include "gsqg/spectral/random_field.hpp"

using namespace gsqg;
using namespace gsqg::harness;
using multipliers::LogFamily;
using multipliers::Symbol;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double time_limit = 0.0;  // seconds; 0 means none

    void add(const std::string& what, double measured, const std::string& rel, double tol, bool ok) {
        std::ostringstream s;
        s.precision(4);
        if (!detail.empty()) s << "; ";
        s << what << '=' << measured << " (" << rel << ' ' << tol << ')';
        detail += s.str();
        pass = pass && ok && std::isfinite(measured);
    }
    void le(const std::string& what, double m, double tol) { add(what, m, "<=", tol, m <= tol); }
    void lt(const std::string& what, double m, double tol) { add(what, m, "<", tol, m < tol); }
    void ge(const std::string& what, double m, double tol) { add(what, m, ">=", tol, m >= tol); }
    void eq(const std::string& what, double m, double v) { add(what, m, "==", v, m == v); }
};

enum class Kind { Le, Lt, Ge, Eq, Flag };

struct Rule {
    std::string key;
    Kind kind;
    double tol = 0.0;
};

// Applies each rule to every assertion whose name contains its key and keeps the
// worst measurement. A rule that matches nothing fails.
void apply(Outcome& out, const std::vector<ExperimentReport>& reports, const std::vector<Rule>& rules,
           const std::string& tag = {}) {
    for (const Rule& rule : rules) {
        int matched = 0;
        double worst = rule.kind == Kind::Ge ? std::numeric_limits<double>::infinity() : -1.0;
        bool flags_ok = true;
        for (const auto& rep : reports) {
            for (const auto& a : rep.assertions) {
                if (a.name.find(rule.key) == std::string::npos) continue;
                ++matched;
                double m = a.measured;
                if (!std::isfinite(m)) m = std::numeric_limits<double>::infinity();
                switch (rule.kind) {
                    case Kind::Ge: worst = std::min(worst, m); break;
                    case Kind::Flag: flags_ok = flags_ok && a.pass; break;
                    default: worst = std::max(worst, m);
                }
            }
        }
        const std::string name = tag + rule.key;
        if (matched == 0) {
            out.add(name + " missing", 0.0, "n/a", 0.0, false);
            continue;
        }
        switch (rule.kind) {
            case Kind::Le: out.le(name, worst, rule.tol); break;
            case Kind::Lt: out.lt(name, worst, rule.tol); break;
            case Kind::Ge: out.ge(name, worst, rule.tol); break;
            case Kind::Eq: out.eq(name, worst, rule.tol); break;
            case Kind::Flag: out.add(name + "_all", flags_ok ? 1.0 : 0.0, "==", 1.0, flags_ok); break;
        }
    }
}

Config base_config(int n, double t_final) {
    Config c;
    c.grid.n = n;
    c.t_final = t_final;
    return c;
}

// Classification against mu > mutilde + 1/2; only the cell next to the edge may differ.
void threshold_criterion(Outcome& out, LogFamily family) {
    std::vector<double> mu;
    for (int i = 1; i <= 10; ++i) mu.push_back(0.2 * i);
    const std::vector<double> mutilde{-0.5, 0.0, 0.5, 1.0};
    const auto scan = multipliers::threshold_scan(family, mu, mutilde);
    int total = 0;
    int far = 0;
    int worst_column = 0;
    for (std::size_t c = 0; c < mutilde.size(); ++c) {
        const double edge = mutilde[c] + 0.5;
        // Index of the first mu above the edge; the adjacent cells are that one and the one below.
        std::size_t first_above = mu.size();
        for (std::size_t r = 0; r < mu.size(); ++r) {
            if (mu[r] > edge + 1e-9) {
                first_above = r;
                break;
            }
        }
        int column = 0;
        for (std::size_t r = 0; r < mu.size(); ++r) {
            const bool rule = r >= first_above;
            if (scan.admissible[r][c] == rule) continue;
            ++total;
            ++column;
            const bool adjacent = r == first_above || r + 1 == first_above || std::abs(mu[r] - edge) < 1e-9;
            if (!adjacent) ++far;
        }
        worst_column = std::max(worst_column, column);
    }
    out.eq("non_adjacent_disagreements", far, 0.0);
    out.le("disagreements_per_column", worst_column, 1.0);
    out.detail += "; total_disagreements=" + std::to_string(total);
    out.time_limit = 60.0;
}

void criterion_1(Outcome& out) { threshold_criterion(out, LogFamily::Log); }
void criterion_2(Outcome& out) { threshold_criterion(out, LogFamily::IterLog); }

void criterion_3(Outcome& out) {
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, 10.0, 100.0}) {
        worst = std::max(worst, std::abs(multipliers::log_identity_quadrature(lambda) - std::log1p(lambda)));
    }
    out.le("max_abs_error", worst, 1e-8);
}

void criterion_4(Outcome& out) {
    solver::RunConfig rc;
    rc.grid.n = 64;
    rc.suite.beta = 2.0;
    rc.suite.p_a = Symbol::identity();
    rc.suite.p_b = Symbol::identity();
    rc.suite.m = Symbol::log_power(1.0);
    rc.t_final = 1.0;
    spectral::RandomFieldSpec rs;
    rs.seed = 4;
    const SpectralField theta0 = spectral::random_field(rc.grid, rs);
    const solver::RunResult r = solver::run(rc, theta0);
    const double t = r.trajectory.final_time;
    // Each mode decays by exp(-t ln(e + |k|^2)) = (e + |k|^2)^-t.
    double worst = 0.0;
    const int half = rc.grid.n / 2;
    for (int k1 = -half + 1; k1 < half; ++k1) {
        for (int k2 = -half + 1; k2 < half; ++k2) {
            const auto c0 = theta0.at(k1, k2);
            if (std::abs(c0) == 0.0) continue;
            const auto expect = c0 * std::pow(std::numbers::e + double(k1 * k1 + k2 * k2), -t);
            worst = std::max(worst, std::abs(r.trajectory.final_state.at(k1, k2) - expect) / std::abs(expect));
        }
    }
    out.eq("final_time", t, 1.0);
    out.le("max_relative_mode_error", worst, 1e-10);
    out.time_limit = 10.0;
}

void criterion_5(Outcome& out) {
    Config c = base_config(128, 1.0);
    c.suite.beta = 1.0;
    c.suite.m = Symbol::log_power(1.0);
    apply(out, {exp_energy_balance(c)}, {{"energy_residual", Kind::Le, 1e-6}, {"inviscid_l2_drift", Kind::Le, 1e-8}});
}

void criterion_6(Outcome& out) {
    MaxPrincipleOptions o;
    o.gammas = {0.0, 1.0};
    apply(out, {exp_max_principle(base_config(128, 1.0), o)}, {{"_growth", Kind::Le, 1.0 + 5e-3}});
}

void criterion_7(Outcome& out) {
    ConvexityOptions o;
    o.trials = 20;
    apply(out, {exp_convexity(base_config(128, 1.0), o)},
          {{"_worst_relative_deficit", Kind::Le, 1e-8}, {"_failed_trials", Kind::Eq, 0.0}});
}

void criterion_8(Outcome& out) {
    apply(out, {exp_lp_machinery(base_config(128, 1.0))},
          {{"reconstruction_residual", Kind::Le, 1e-12},
           {"bernstein_sigma1_min", Kind::Ge, 0.5},
           {"bernstein_sigma1_max", Kind::Le, 2.0},
           {"bernstein_sigma2_min", Kind::Ge, 0.25},
           {"bernstein_sigma2_max", Kind::Le, 4.0},
           {"besov_sobolev_c_emp", Kind::Le, 4.0}});
}

void criterion_9(Outcome& out) {
    for (double beta : {0.0, 1.0, 1.5}) {
        Config c = base_config(128, 0.5);
        c.suite.beta = beta;
        StabilityOptions o;
        o.deltas = {1e-2, 1e-3, 1e-4};
        const ExperimentReport rep = exp_stability(c, o);
        const std::string tag = "beta" + std::to_string(beta).substr(0, 3) + ".";
        for (const auto& [k, v] : rep.values) {
            if (k == "admissible" && v != "true") out.add(tag + "admissible", 0.0, "==", 1.0, false);
        }
        apply(out, {rep}, {{"slope_deviation", Kind::Le, 0.1}, {"identical_twin_difference", Kind::Le, 1e-13}}, tag);
    }
}

void criterion_10(Outcome& out) {
    for (double beta : {1.0, 1.5}) {
        Config c = base_config(64, 0.5);
        c.suite.beta = beta;
        apply(out, {exp_kato_split(c)}, {{"split_residual", Kind::Le, 1e-8}},
              "beta" + std::to_string(beta).substr(0, 3) + ".");
    }
}

void criterion_11(Outcome& out) {
    Config c = base_config(128, 0.5);
    c.suite.beta = 1.0;
    c.suite.m = Symbol::log_power(1.0);
    c.suite.nu = Symbol::log_power(1.0);
    c.suite.p_a = Symbol::identity();
    c.suite.p_b = Symbol::identity();
    SmoothingOptions o;
    o.lambda_star = 0.05;
    apply(out, {exp_smoothing(c, o)},
          {{"_gevrey_finite", Kind::Flag},
           {"_no_saturation", Kind::Flag},
           {"_gevrey_growth", Kind::Le, 10.0},
           {"lambda0_track_mismatches", Kind::Eq, 0.0}});
}

void criterion_12(Outcome& out) {
    const Config c = base_config(128, 1.0);
    apply(out, {exp_commutator(c), exp_product(c)},
          {{"_max_ratio_finite", Kind::Flag},
           {"_top_shell_variation", Kind::Lt, 2.0},
           {"_constant_g_lhs", Kind::Le, 1e-13},
           {"bony_residual", Kind::Le, 1e-11}});
}

void criterion_13(Outcome& out) {
    GlobalEulerOptions o;
    o.gamma = 1.0;
    apply(out, {exp_global_euler(base_config(128, 5.0), o)},
          {{"no_blowup", Kind::Flag}, {"h1_growth", Kind::Le, 100.0}});
    out.time_limit = 300.0;
}

void criterion_14(Outcome& out) {
    ViscosityOptions o;
    o.eps = {1e-2, 1e-3, 1e-4};
    apply(out, {exp_viscosity(base_config(64, 0.5), o)}, {{"error_ratio_", Kind::Le, 0.5}});
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "threshold_log", criterion_1},         {2, "threshold_iterlog", criterion_2},
        {3, "log_identity", criterion_3},          {4, "linear_oracle", criterion_4},
        {5, "energy_law", criterion_5},            {6, "maximum_principle", criterion_6},
        {7, "convexity", criterion_7},             {8, "littlewood_paley", criterion_8},
        {9, "stability", criterion_9},             {10, "kato_splitting", criterion_10},
        {11, "gevrey_smoothing", criterion_11},    {12, "commutator_product", criterion_12},
        {13, "global_euler", criterion_13},        {14, "artificial_viscosity", criterion_14},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail += std::string(out.detail.empty() ? "" : "; ") + "exception: " + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.time_limit > 0.0) out.lt("runtime_s", secs, out.time_limit);
        if (!out.pass) ++failures;
        std::printf("criterion %2d %-22s %s | %s | %.2f s\n", c.id, c.name, out.pass ? "PASS" : "FAIL",
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
