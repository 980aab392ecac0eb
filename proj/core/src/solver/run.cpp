#include "gsqg/solver/run.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/io/atomic_file.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/operators.hpp"

namespace gsqg::solver {

using spectral::cplx;
using spectral::WeightedNormSpec;
using spectral::ZeroModeRule;

namespace {

constexpr double kMaxSteps = 1e7;

bool all_finite(const SpectralField& f) {
    for (const cplx& c : f.coeffs()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

void validate_config(const RunConfig& config) {
    config.grid.validate();
    if (!(config.t_final >= 0.0) || !std::isfinite(config.t_final)) {
        throw Error(Errc::InvalidArgument, "t_final must be finite and >= 0");
    }
    if (config.cadence < 1) throw Error(Errc::InvalidArgument, "cadence must be >= 1");
    if (config.snapshot_cadence < 0) throw Error(Errc::InvalidArgument, "snapshot cadence must be >= 0");
    if (config.lambda_track < 0.0) throw Error(Errc::InvalidArgument, "lambda_track must be >= 0");
    if (config.q_mode == QMode::Prescribed && !config.q_source) {
        throw Error(Errc::InvalidArgument, "prescribed q mode needs a q source");
    }
}

Rhs make_rhs(const RunConfig& config, const ProteanOperator& op) {
    return [&config, &op](double t, const State& y, State& out) {
        const SpectralField& theta = y[0];
        SpectralField q = config.q_mode == QMode::Self ? theta * -1.0 : config.q_source(t);
        out[0] = op.flux_divergence(q, theta);
        out[0] *= -1.0;
        if (config.forcing) out[0] += config.forcing(t);
    };
}

}  // namespace

double effective_dt(const RunConfig& config, const ProteanOperator& op, const SpectralField& theta0) {
    const double T = config.t_final;
    double dt = 0.0;
    if (config.dt) {
        dt = *config.dt;
        if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(Errc::InvalidArgument, "dt must be positive and finite");
    } else {
        const SpectralField q0 = config.q_mode == QMode::Self ? theta0 * -1.0 : config.q_source(0.0);
        const double speed = op.max_speed(q0);
        const double cfl = speed > 0.0 ? 0.5 * config.grid.dx() / speed : T / 100.0;
        dt = std::min(cfl, T / 100.0);
        if (!(dt > 0.0) || !std::isfinite(dt)) {
            throw Error(Errc::CflViolation, "no finite step satisfies dt <= 0.5 dx / max|u|");
        }
    }
    const double steps = std::ceil(T / dt - 1e-12);
    if (!(steps <= kMaxSteps)) throw Error(Errc::CflViolation, "step count exceeds 1e7");
    return T / std::max(steps, 1.0);
}

NormTracker::NormTracker(const RunConfig& config) : lambda_(config.lambda_track) {
    const auto& suite = config.suite;
    const double sigma = 1.0 + suite.beta;
    WeightedNormSpec inhom;
    inhom.sigma = sigma;
    inhom.omega = suite.omega();
    sob_ = spectral::weight_table(config.grid, inhom).weight;
    const std::vector<double> m = spectral::symbol_table(config.grid, suite.m, ZeroModeRule::Zero);
    diss_.resize(sob_.size());
    for (std::size_t i = 0; i < sob_.size(); ++i) diss_[i] = sob_[i] * std::sqrt(m[i]);
    WeightedNormSpec hom = inhom;
    hom.homogeneous = true;
    hom_ = spectral::weight_table(config.grid, hom).weight;
    nu_ = spectral::symbol_table(config.grid, suite.nu, ZeroModeRule::Zero);
    for (const auto& spec : config.norm_specs) extra_.push_back(spectral::weight_table(config.grid, spec));
}

NormRecord NormTracker::measure(double t, const SpectralField& theta) const {
    NormRecord r;
    r.t = t;
    r.l2 = spectral::l2_norm(theta);
    r.linf = spectral::linf_norm(spectral::transform_backward(theta));
    r.sob = spectral::weighted_norm(theta, spectral::WeightTable{sob_, false});
    r.diss = spectral::weighted_norm(theta, spectral::WeightTable{diss_, false});

    // Same arithmetic as weight_table, so a zero rate reproduces the plain norm bit for bit.
    const double lam = lambda_ * t;
    std::vector<double> w(hom_.size());
    const auto c = theta.coeffs();
    for (std::size_t i = 0; i < w.size(); ++i) {
        double expo = lam * nu_[i];
        if (expo > spectral::kGevreyCap) {
            expo = spectral::kGevreyCap;
            if (c[i] != cplx(0.0, 0.0)) r.saturated = true;
        }
        w[i] = hom_[i];
        w[i] *= std::exp(expo);
    }
    r.gevrey = spectral::weighted_norm(theta, spectral::WeightTable{std::move(w), r.saturated});
    for (const auto& table : extra_) r.extra.push_back(spectral::weighted_norm(theta, table));
    return r;
}

RunResult run(const RunConfig& config, const SpectralField& theta0, const Observer& observer) {
    validate_config(config);
    if (!(theta0.grid() == config.grid)) throw Error(Errc::ShapeMismatch, "initial field grid differs from the run grid");
    if (!theta0.zero_mean()) throw Error(Errc::ZeroModeUndefined, "initial field must have zero mean");
    if (!all_finite(theta0)) throw Error(Errc::InvalidArgument, "initial field is not finite");

    const ProteanOperator op(config.grid, config.suite, config.eps_visc);
    const NormTracker tracker(config);
    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.snapshots.emplace_back(0.0, theta0);
    result.norms.rows.push_back(tracker.measure(0.0, theta0));
    if (observer) observer(0.0, theta0);

    if (config.t_final == 0.0) {
        traj.final_state = theta0;
        return result;
    }

    const double dt = effective_dt(config, op, theta0);
    const long steps = std::lround(config.t_final / dt);
    traj.dt = dt;
    IntegratingFactorStepper stepper(op.rate(), dt, config.scheme);
    const Rhs rhs = make_rhs(config, op);
    State y{theta0};
    double t = 0.0;
    for (long s = 1; s <= steps; ++s) {
        stepper.step(y, t, rhs);
        if (!all_finite(y[0])) throw BlowupError("state became non-finite", t);
        const double t_next = s * dt;
        const bool last = s == steps;
        if (s % config.cadence == 0 || last) {
            NormRecord rec = tracker.measure(t_next, y[0]);
            const bool finite = std::isfinite(rec.l2) && std::isfinite(rec.linf) && std::isfinite(rec.sob) &&
                                std::isfinite(rec.diss) && std::isfinite(rec.gevrey);
            if (!finite) throw BlowupError("tracked norm became non-finite", t);
            result.norms.rows.push_back(std::move(rec));
            if (observer) observer(t_next, y[0]);
        }
        if (config.snapshot_cadence > 0 && s % config.snapshot_cadence == 0 && !last) {
            traj.snapshots.emplace_back(t_next, y[0]);
        }
        t = t_next;
    }
    traj.snapshots.emplace_back(t, y[0]);
    traj.final_state = std::move(y[0]);
    traj.final_time = t;
    traj.steps = steps;
    return result;
}

SpectralField step(const SpectralField& theta, double t, double dt, const RunConfig& config) {
    validate_config(config);
    const ProteanOperator op(config.grid, config.suite, config.eps_visc);
    IntegratingFactorStepper stepper(op.rate(), dt, config.scheme);
    State y{theta};
    stepper.step(y, t, make_rhs(config, op));
    return std::move(y[0]);
}

std::string norm_series_csv(const NormSeries& series) {
    std::ostringstream out;
    out << "t,l2,linf,sob,diss,gevrey,saturated";
    const std::size_t extra = series.rows.empty() ? 0 : series.rows.front().extra.size();
    for (std::size_t i = 0; i < extra; ++i) out << ",extra_" << i;
    out << '\n';
    for (const auto& r : series.rows) {
        out << multipliers::format_real(r.t) << ',' << multipliers::format_real(r.l2) << ','
            << multipliers::format_real(r.linf) << ',' << multipliers::format_real(r.sob) << ','
            << multipliers::format_real(r.diss) << ',' << multipliers::format_real(r.gevrey) << ','
            << (r.saturated ? 1 : 0);
        for (double v : r.extra) out << ',' << multipliers::format_real(v);
        out << '\n';
    }
    return out.str();
}

void write_norm_series_csv(const std::filesystem::path& path, const NormSeries& series) {
    io::write_file_atomic(path, norm_series_csv(series));
}

}  // namespace gsqg::solver
