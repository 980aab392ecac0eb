#include "gsqg/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/error.hpp"
#include "gsqg/harness/csv.hpp"
#include "gsqg/solver/run.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/norms.hpp"
#include "gsqg/spectral/operators.hpp"
#include "gsqg/spectral/random_field.hpp"

namespace gsqg::harness {

using multipliers::MultiplierSuite;
using multipliers::Symbol;
using solver::ProteanOperator;
using solver::RunConfig;
using spectral::GridSpec;
using spectral::PhysicalField;
using spectral::WeightedNormSpec;
using spectral::WeightTable;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double x) { return x * x; }

void save(ExperimentReport& rep, const ArtifactDir& dir, const std::string& name, const CsvTable& table) {
    if (!dir) return;
    const auto path = *dir / (rep.id + "_" + name + ".csv");
    table.write(path);
    rep.artifacts.push_back(path);
}

ExperimentReport start(const std::string& id, const Config& cfg) {
    ExperimentReport rep;
    rep.id = id;
    rep.config_digest = cfg.digest();
    return rep;
}

/// Ratio n / n0 with 0 / 0 read as 1.
double growth(double n, double n0) {
    if (n0 > 0.0) return n / n0;
    return n == 0.0 ? 1.0 : kInf;
}

std::string tag(double x) {
    std::string s = multipliers::format_real(x);
    for (auto& c : s) {
        if (c == '.') c = 'p';
        if (c == '-') c = 'm';
    }
    return s;
}

WeightTable table_for(const GridSpec& g, double sigma, const Symbol& omega, bool homogeneous) {
    WeightedNormSpec spec;
    spec.sigma = sigma;
    spec.omega = omega;
    spec.homogeneous = homogeneous;
    return spectral::weight_table(g, spec);
}

SpectralField perturbation_direction(const Config& cfg) {
    spectral::RandomFieldSpec spec;
    spec.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
    spec.amplitude = 1.0;
    spec.spectral_decay = cfg.init.decay;
    return spectral::random_field(cfg.grid, spec);
}

MultiplierSuite euler_suite(const MultiplierSuite& base, double gamma) {
    MultiplierSuite s = base;
    s.beta = 0.0;
    s.m = Symbol::log_power(1.0);
    s.p_a = Symbol::iter_log_power(gamma);
    s.p_b = Symbol::identity();
    return s;
}

// Y norm with tables built once per grid and suite.
class YNorm {
public:
    YNorm(const GridSpec& g, const MultiplierSuite& suite) : beta_(suite.beta) {
        const Symbol omega = suite.omega();
        if (beta_ == 0.0) {
            first_ = table_for(g, 0.0, omega, false);
            second_ = table_for(g, -1.0, omega, true);
        } else if (beta_ < 1.0) {
            first_ = table_for(g, 0.0, omega, false);
        } else {
            first_ = table_for(g, beta_, omega, false);
        }
    }

    double operator()(const SpectralField& f) const {
        const double a = spectral::weighted_norm(f, first_);
        if (beta_ != 0.0) return a;
        if (!f.zero_mean()) throw Error(Errc::ZeroModeUndefined, "negative-order part of the Y norm needs zero mean");
        return std::hypot(a, spectral::weighted_norm(f, second_));
    }

private:
    double beta_;
    WeightTable first_;
    WeightTable second_;
};

// Least-squares slope of ys against xs.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double y_norm(const SpectralField& f, const MultiplierSuite& suite) { return YNorm(f.grid(), suite)(f); }

// ---------------------------------------------------------------------------

ExperimentReport exp_energy_balance(const Config& cfg, const EnergyOptions& opts, const ArtifactDir& dir) {
    if (cfg.suite.beta < 0.0 || cfg.suite.beta > 1.0) {
        throw Error(Errc::InvalidArgument, "energy balance needs beta in [0, 1]");
    }
    ExperimentReport rep = start("energy", cfg);
    const SpectralField theta0 = config::initial_field(cfg);
    RunConfig rc = config::run_config(cfg);
    if (!rc.dt) rc.dt = opts.dt;
    rc.cadence = 1;

    // Dissipation weights sqrt(m + eps |k|^2).
    const ProteanOperator op(cfg.grid, cfg.suite, cfg.eps_visc);
    WeightTable diss;
    diss.weight = op.rate();
    for (auto& w : diss.weight) w = std::sqrt(w);

    const double e0 = sq(spectral::l2_norm(theta0));
    CsvTable table{{"t", "energy", "dissipation", "residual"}, {}};
    double integral = 0.0;
    double prev_t = 0.0;
    double prev_d = 0.0;
    bool first = true;
    double worst = 0.0;
    solver::run(rc, theta0, [&](double t, const SpectralField& th) {
        const double e = sq(spectral::l2_norm(th));
        const double d = sq(spectral::weighted_norm(th, diss));
        if (!first) integral += 0.5 * (t - prev_t) * (d + prev_d);
        first = false;
        prev_t = t;
        prev_d = d;
        const double res = std::abs(e + 2.0 * integral - e0) / (e0 > 0.0 ? e0 : 1.0);
        worst = std::max(worst, res);
        table.rows.push_back({t, e, d, res});
    });
    rep.record("dt", *rc.dt);
    rep.record("initial_energy", e0);
    rep.check("energy_residual", worst, opts.tol);
    save(rep, dir, "balance", table);

    if (opts.inviscid_check) {
        RunConfig inv = rc;
        inv.suite.m = Symbol::constant(0.0);
        inv.eps_visc = 0.0;
        const double n0 = spectral::l2_norm(theta0);
        double drift = 0.0;
        CsvTable itable{{"t", "l2", "drift"}, {}};
        solver::run(inv, theta0, [&](double t, const SpectralField& th) {
            const double n = spectral::l2_norm(th);
            const double d = std::abs(n - n0) / (n0 > 0.0 ? n0 : 1.0);
            drift = std::max(drift, d);
            itable.rows.push_back({t, n, d});
        });
        rep.check("inviscid_l2_drift", drift, opts.inviscid_tol);
        save(rep, dir, "inviscid", itable);
    }
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_max_principle(const Config& cfg, const MaxPrincipleOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("maxprin", cfg);
    const double ps[] = {2.0, 4.0, 8.0, kInf};
    const char* pnames[] = {"L2", "L4", "L8", "Linf"};
    for (double gamma : opts.gammas) {
        for (const auto& field : opts.fields) {
            Config c = cfg;
            c.suite = euler_suite(cfg.suite, gamma);
            SpectralField theta0;
            if (field == "random") {
                theta0 = config::initial_field([&] {
                    Config r = c;
                    r.init.kind = config::InitKind::Random;
                    return r;
                }());
            } else {
                theta0 = spectral::named_field(c.grid, field) * c.init.amplitude;
            }
            const PhysicalField p0 = spectral::transform_backward(theta0);
            double n0[4];
            for (int i = 0; i < 4; ++i) n0[i] = spectral::lp_norm(p0, ps[i]);
            double worst[4] = {0.0, 0.0, 0.0, 0.0};
            CsvTable table{{"t", "L2", "L4", "L8", "Linf"}, {}};
            solver::run(config::run_config(c), theta0, [&](double t, const SpectralField& th) {
                const PhysicalField p = spectral::transform_backward(th);
                std::vector<double> row{t};
                for (int i = 0; i < 4; ++i) {
                    const double n = spectral::lp_norm(p, ps[i]);
                    worst[i] = std::max(worst[i], growth(n, n0[i]));
                    row.push_back(n);
                }
                table.rows.push_back(std::move(row));
            });
            const std::string base = "gamma" + tag(gamma) + "_" + field;
            for (int i = 0; i < 4; ++i) rep.check(base + "_" + pnames[i] + "_growth", worst[i], 1.0 + opts.tol);
            save(rep, dir, base, table);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

ConvexityResult probe_convexity(const SpectralField& f, ConvexPhi phi, double tol) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    // Top-third content at roundoff level (e.g. from sampling) is dropped.
    SpectralField band(f);
    auto c = band.coeffs();
    double peak = 0.0;
    for (const auto& v : c) peak = std::max(peak, std::abs(v));
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            const int k = std::max(std::abs(g.wavenumber(i1)), std::abs(g.wavenumber(i2)));
            auto& v = c[static_cast<std::size_t>(i1) * n + i2];
            if (3 * k <= n) continue;
            if (std::abs(v) > 1e-13 * peak) {
                throw Error(Errc::InvalidArgument, "convexity probe needs the top third of the spectrum empty");
            }
            v = 0.0;
        }
    }
    const int m = 3 * n;
    const SpectralField fp = spectral::pad(band, m);
    GridSpec big = g;
    big.n = m;
    const std::vector<double> L = spectral::radial_table(big, [](double r) { return std::log1p(r * r); });
    const PhysicalField u = spectral::transform_backward(fp);
    const PhysicalField lu = spectral::transform_backward(spectral::apply_table(fp, L));
    PhysicalField phi_u(big);
    std::vector<double> dphi(u.values.size());
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double x = u.values[i];
        if (phi == ConvexPhi::Square) {
            phi_u.values[i] = x * x;
            dphi[i] = 2.0 * x;
        } else {
            phi_u.values[i] = x * x * x * x;
            dphi[i] = 4.0 * x * x * x;
        }
    }
    const PhysicalField lphi =
        spectral::transform_backward(spectral::apply_table(spectral::transform_forward(phi_u), L));
    ConvexityResult r;
    r.min_value = kInf;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = dphi[i] * lu.values[i];
        r.min_value = std::min(r.min_value, a - lphi.values[i]);
        r.scale = std::max(r.scale, std::abs(a));
    }
    r.pass = r.min_value >= -tol * r.scale;
    return r;
}

ExperimentReport exp_convexity(const Config& cfg, const ConvexityOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("convexity", cfg);
    CsvTable table{{"trial", "phi", "min", "scale"}, {}};
    for (int phi_i = 0; phi_i < 2; ++phi_i) {
        const ConvexPhi phi = phi_i == 0 ? ConvexPhi::Square : ConvexPhi::FourthPower;
        double worst = 0.0;
        double margin = kInf;
        int failures = 0;
        for (int t = 0; t < opts.trials; ++t) {
            spectral::RandomFieldSpec spec;
            spec.seed = cfg.seed + static_cast<std::uint64_t>(t);
            spec.amplitude = cfg.init.amplitude > 0.0 ? cfg.init.amplitude : 1.0;
            spec.spectral_decay = cfg.init.decay;
            spec.k_max = cfg.grid.n / 3;
            const ConvexityResult r = probe_convexity(spectral::random_field(cfg.grid, spec), phi, opts.tol);
            if (!r.pass) ++failures;
            if (r.scale > 0.0) {
                worst = std::max(worst, -r.min_value / r.scale);
                margin = std::min(margin, r.min_value / r.scale);
            }
            table.rows.push_back({double(t), double(phi_i), r.min_value, r.scale});
        }
        const std::string name = phi == ConvexPhi::Square ? "square" : "fourth";
        rep.check(name + "_worst_relative_deficit", worst, opts.tol);
        rep.record(name + "_min_relative_value", margin);
        rep.check(name + "_failed_trials", failures, 0.0, Relation::Equal);
        const ConvexityResult s = probe_convexity(spectral::named_field(cfg.grid, "sin_x1"), phi, opts.tol);
        rep.check_flag(name + "_sin_x1", s.pass);
    }
    save(rep, dir, "trials", table);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_smoothing(const Config& cfg, const SmoothingOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("smoothing", cfg);
    const SpectralField theta0 = config::initial_field(cfg);
    const auto& suite = cfg.suite;
    rep.record("admissible", multipliers::admissible_for_some_gamma(suite).admissible ? "true" : "false");
    const bool log_case = suite.m.kind() == Symbol::Kind::LogPower && suite.m.parameter() >= 1.0 && suite.nu == suite.m;

    for (double lam : {opts.lambda_star, 0.5 * opts.lambda_star}) {
        RunConfig rc = config::run_config(cfg);
        rc.lambda_track = lam;
        double worst_shifted = 0.0;
        bool shifted_finite = true;
        const solver::RunResult res = solver::run(rc, theta0, [&](double t, const SpectralField& th) {
            if (!log_case) return;
            WeightedNormSpec spec;
            spec.sigma = 1.0 + suite.beta + lam * t;
            spec.homogeneous = true;
            const double v = spectral::weighted_norm(th, spec).value;
            shifted_finite = shifted_finite && std::isfinite(v);
            worst_shifted = std::max(worst_shifted, v);
        });
        const auto& rows = res.norms.rows;
        bool finite = true;
        bool saturated = false;
        double peak = 0.0;
        for (const auto& r : rows) {
            finite = finite && std::isfinite(r.gevrey);
            saturated = saturated || r.saturated;
            peak = std::max(peak, r.gevrey);
        }
        const std::string base = "lambda" + tag(lam);
        rep.check_flag(base + "_gevrey_finite", finite);
        rep.check_flag(base + "_no_saturation", !saturated);
        rep.check(base + "_gevrey_growth", growth(peak, rows.front().gevrey), opts.growth_cap);
        if (log_case) {
            rep.check_flag(base + "_shifted_sobolev_finite", shifted_finite);
            rep.record(base + "_shifted_sobolev_max", worst_shifted);
        }
        if (dir) {
            const auto path = *dir / (rep.id + "_" + base + ".csv");
            std::filesystem::create_directories(*dir);
            solver::write_norm_series_csv(path, res.norms);
            rep.artifacts.push_back(path);
        }
    }

    RunConfig rc = config::run_config(cfg);
    rc.lambda_track = 0.0;
    WeightedNormSpec plain;
    plain.sigma = 1.0 + suite.beta;
    plain.omega = suite.omega();
    plain.homogeneous = true;
    rc.norm_specs = {plain};
    const solver::RunResult res = solver::run(rc, theta0);
    int mismatches = 0;
    for (const auto& r : res.norms.rows) {
        if (r.gevrey != r.extra.at(0)) ++mismatches;
    }
    rep.check("lambda0_track_mismatches", mismatches, 0.0, Relation::Equal);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_stability(const Config& cfg, const StabilityOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("stability", cfg);
    const SpectralField theta0 = config::initial_field(cfg);
    const SpectralField phi = perturbation_direction(cfg);
    const YNorm ynorm(cfg.grid, cfg.suite);

    RunConfig rc = config::run_config(cfg);
    rc.cadence = 1;
    {
        const ProteanOperator op(cfg.grid, cfg.suite, cfg.eps_visc);
        rc.dt = solver::effective_dt(rc, op, theta0);
    }
    rep.record("dt", *rc.dt);
    rep.record("admissible", multipliers::admissible_for_some_gamma(cfg.suite).admissible ? "true" : "false");

    std::vector<SpectralField> base;
    solver::run(rc, theta0, [&](double, const SpectralField& th) { base.push_back(th); });

    std::size_t idx = 0;
    double twin = 0.0;
    solver::run(rc, theta0, [&](double, const SpectralField& th) {
        twin = std::max(twin, spectral::l2_norm(th - base.at(idx++)));
    });
    const double n0 = spectral::l2_norm(theta0);
    rep.check("identical_twin_difference", n0 > 0.0 ? twin / n0 : twin, opts.twin_tol);

    const double phi_norm = ynorm(phi);
    rep.record("phi_y_norm", phi_norm);
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> ys_final;
    double c_emp = 0.0;
    CsvTable table{{"delta", "sup_y_norm", "final_y_norm", "ratio"}, {}};
    for (double delta : opts.deltas) {
        idx = 0;
        double sup = 0.0;
        double last = 0.0;
        solver::run(rc, theta0 + delta * phi, [&](double, const SpectralField& th) {
            last = ynorm(th - base.at(idx++));
            sup = std::max(sup, last);
        });
        const double ratio = sup / (delta * phi_norm);
        c_emp = std::max(c_emp, ratio);
        xs.push_back(std::log(delta));
        ys.push_back(std::log(sup));
        ys_final.push_back(std::log(last));
        table.rows.push_back({delta, sup, last, ratio});
    }
    const double slope = fit_slope(xs, ys);
    rep.check("slope_deviation", std::abs(slope - 1.0), opts.slope_tol);
    rep.record("slope", slope);
    rep.record("final_time_slope", fit_slope(xs, ys_final));
    rep.check("c_emp", c_emp, opts.c_max);
    save(rep, dir, "deltas", table);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_kato_split(const Config& cfg, const KatoOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("kato", cfg);
    const ProteanOperator op(cfg.grid, cfg.suite, cfg.eps_visc);
    const SpectralField theta0 = config::initial_field(cfg);
    const SpectralField thetan0 = theta0 + opts.delta * perturbation_direction(cfg);

    RunConfig rc = config::run_config(cfg);
    const double dt = solver::effective_dt(rc, op, thetan0);
    const long steps = cfg.t_final > 0.0 ? std::lround(cfg.t_final / dt) : 0;
    rep.record("dt", dt);
    rep.record("delta", opts.delta);

    // theta, theta^n, varsigma_1, varsigma_2, zeta_1, zeta_2
    solver::State y(6);
    y[0] = theta0;
    y[1] = thetan0;
    for (int l = 1; l <= 2; ++l) {
        y[1 + l] = spectral::derivative(theta0, l);
        y[3 + l] = spectral::derivative(thetan0, l) - spectral::derivative(theta0, l);
    }
    const solver::Rhs rhs = [&op](double, const solver::State& s, solver::State& out) {
        const SpectralField qn = s[1] * -1.0;
        out[0] = op.flux_divergence(s[0] * -1.0, s[0]) * -1.0;
        out[1] = op.flux_divergence(qn, s[1]) * -1.0;
        for (int l = 1; l <= 2; ++l) {
            const SpectralField g = op.flux_divergence(spectral::derivative(s[0], l), s[0]);
            const SpectralField gn = op.flux_divergence(spectral::derivative(s[1], l), s[1]);
            out[1 + l] = g - op.flux_divergence(qn, s[1 + l]);
            out[3 + l] = gn - g - op.flux_divergence(qn, s[3 + l]);
        }
    };

    double worst = 0.0;
    double zeta_max = 0.0;
    CsvTable table{{"t", "residual_1", "residual_2"}, {}};
    auto measure = [&](double t) {
        std::vector<double> row{t};
        for (int l = 1; l <= 2; ++l) {
            const SpectralField grad = spectral::derivative(y[1], l);
            const double r = spectral::l2_norm(grad - y[1 + l] - y[3 + l]);
            const double g = spectral::l2_norm(grad);
            const double rel = g > 0.0 ? r / g : r;
            worst = std::max(worst, rel);
            zeta_max = std::max(zeta_max, spectral::l2_norm(y[3 + l]));
            row.push_back(rel);
        }
        table.rows.push_back(std::move(row));
    };
    measure(0.0);
    if (steps > 0) {
        solver::IntegratingFactorStepper stepper(op.rate(), dt, cfg.scheme);
        for (long s = 1; s <= steps; ++s) {
            stepper.step(y, (s - 1) * dt, rhs);
            if (s % cfg.cadence == 0 || s == steps) measure(s * dt);
        }
    }
    rep.check("split_residual", worst, opts.tol);
    rep.record("zeta_max", zeta_max);
    save(rep, dir, "residual", table);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_global_euler(const Config& cfg, const GlobalEulerOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("global_euler", cfg);
    Config c = cfg;
    c.suite = euler_suite(cfg.suite, opts.gamma);
    const SpectralField theta0 = config::initial_field(c);
    const ProteanOperator op(c.grid, c.suite, c.eps_visc);
    const WeightTable h1 = table_for(c.grid, 1.0, Symbol::identity(), false);
    const WeightTable h1d = table_for(c.grid, 1.0 + opts.sobolev_delta, Symbol::identity(), false);

    CsvTable table{{"t", "h1", "h1_delta", "grad_u_inf", "log_ratio"}, {}};
    double worst_log_ratio = 0.0;
    double last_h1 = 0.0;
    auto observe = [&](double t, const SpectralField& th) {
        const solver::Velocity u = op.velocity(th * -1.0);
        PhysicalField d[4] = {spectral::transform_backward(spectral::derivative(u.u1, 1)),
                              spectral::transform_backward(spectral::derivative(u.u1, 2)),
                              spectral::transform_backward(spectral::derivative(u.u2, 1)),
                              spectral::transform_backward(spectral::derivative(u.u2, 2))};
        double grad = 0.0;
        for (std::size_t i = 0; i < d[0].values.size(); ++i) {
            grad = std::max(grad, std::sqrt(sq(d[0].values[i]) + sq(d[1].values[i]) + sq(d[2].values[i]) +
                                            sq(d[3].values[i])));
        }
        const double a = spectral::weighted_norm(th, h1);
        const double b = spectral::weighted_norm(th, h1d);
        const double lr = grad / (1.0 + std::log1p(b));
        worst_log_ratio = std::max(worst_log_ratio, lr);
        last_h1 = a;
        table.rows.push_back({t, a, b, grad, lr});
    };
    const double h1_0 = spectral::weighted_norm(theta0, h1);
    bool blowup = false;
    try {
        solver::run(config::run_config(c), theta0, observe);
    } catch (const BlowupError& e) {
        blowup = true;
        rep.record("blowup_last_good_time", e.last_good_time());
    }
    rep.check_flag("no_blowup", !blowup);
    rep.check("h1_growth", blowup ? kInf : (h1_0 > 0.0 ? last_h1 / h1_0 : last_h1), opts.growth_cap);
    rep.record("grad_u_over_log_sobolev_max", worst_log_ratio);
    save(rep, dir, "track", table);
    return rep;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_viscosity(const Config& cfg, const ViscosityOptions& opts, const ArtifactDir& dir) {
    ExperimentReport rep = start("viscosity", cfg);
    const SpectralField theta0 = config::initial_field(cfg);
    RunConfig rc = config::run_config(cfg);
    rc.eps_visc = 0.0;
    rc.cadence = std::numeric_limits<int>::max();
    {
        const ProteanOperator op(cfg.grid, cfg.suite, 0.0);
        rc.dt = solver::effective_dt(rc, op, theta0);
    }
    const SpectralField ref = solver::run(rc, theta0).trajectory.final_state;
    std::vector<double> errors;
    CsvTable table{{"eps", "error"}, {}};
    for (double eps : opts.eps) {
        RunConfig r = rc;
        r.eps_visc = eps;
        const double e = spectral::l2_norm(solver::run(r, theta0).trajectory.final_state - ref);
        errors.push_back(e);
        table.rows.push_back({eps, e});
        rep.record("error_eps" + tag(eps), e);
    }
    for (std::size_t i = 1; i < errors.size(); ++i) {
        rep.check("error_ratio_" + std::to_string(i), errors[i] / errors[i - 1], opts.ratio);
    }
    save(rep, dir, "errors", table);
    return rep;
}

}  // namespace gsqg::harness
