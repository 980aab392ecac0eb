#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/solver/integrator.hpp"
#include "gsqg/solver/protean.hpp"
#include "gsqg/solver/run.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/norms.hpp"
#include "gsqg/spectral/operators.hpp"
#include "gsqg/spectral/random_field.hpp"

using namespace gsqg;
using namespace gsqg::solver;
using spectral::cplx;
using spectral::PhysicalField;
using spectral::RandomFieldSpec;

namespace {

constexpr double kE = std::numbers::e;

GridSpec grid_n(int n) {
    GridSpec g;
    g.n = n;
    return g;
}

SpectralField field(const GridSpec& g, std::uint64_t seed, double amplitude = 1.0) {
    RandomFieldSpec s;
    s.seed = seed;
    s.amplitude = amplitude;
    return spectral::random_field(g, s);
}

double max_abs(const SpectralField& f) {
    double m = 0.0;
    for (const cplx& c : f.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

RunConfig linear_config(int n, double t_final) {
    RunConfig c;
    c.grid = grid_n(n);
    c.suite.beta = 2.0;
    c.suite.p_a = Symbol::identity();
    c.suite.m = Symbol::log_power(1.0);
    c.t_final = t_final;
    return c;
}

// Worst relative modal error against theta0(k) exp(-t m(|k|)).
double linear_oracle_error(const SpectralField& theta0, const SpectralField& out, double t) {
    const GridSpec& g = theta0.grid();
    double worst = 0.0;
    for (int k1 = -g.n / 2 + 1; k1 < g.n / 2; ++k1) {
        for (int k2 = -g.n / 2 + 1; k2 < g.n / 2; ++k2) {
            const cplx c0 = theta0.at(k1, k2);
            if (std::abs(c0) == 0.0) continue;
            const double r2 = double(k1) * k1 + double(k2) * k2;
            const cplx expect = c0 * std::exp(-t * std::log(kE + r2));
            worst = std::max(worst, std::abs(out.at(k1, k2) - expect) / std::abs(expect));
        }
    }
    return worst;
}

}  // namespace

TEST(Velocity, ZeroStreamGivesZeroVelocity) {
    const GridSpec g = grid_n(16);
    const Velocity v = compute_velocity(SpectralField(g), 1.0, Symbol::identity());
    EXPECT_EQ(max_abs(v.u1), 0.0);
    EXPECT_EQ(max_abs(v.u2), 0.0);
}

TEST(Velocity, SingleModeClosedForm) {
    // beta = 1, p = 1: a(1) = 1, q = cos x2 gives v = (d2 q, -d1 q) = (-sin x2, 0).
    const GridSpec g = grid_n(16);
    PhysicalField q(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) q(i, j) = std::cos(j * g.dx());
    SpectralField qs = spectral::transform_forward(q);
    qs[0] = 0.0;
    const Velocity v = compute_velocity(qs, 1.0, Symbol::identity());
    const PhysicalField u1 = spectral::transform_backward(v.u1);
    const PhysicalField u2 = spectral::transform_backward(v.u2);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            EXPECT_NEAR(u1(i, j), -std::sin(j * g.dx()), 1e-13);
            EXPECT_NEAR(u2(i, j), 0.0, 1e-13);
        }
    }
}

TEST(Velocity, ScalesWithSymbol) {
    // |k| = 5 mode: |v| = |k| a(|k|) |q| with a = r^(beta-2) p.
    const GridSpec g = grid_n(32);
    SpectralField q(g);
    q.at(3, 4) = 1.0;
    q.at(-3, -4) = 1.0;
    const double beta = 0.5;
    const Velocity v = compute_velocity(q, beta, Symbol::log_power(1.0));
    const double a = std::pow(5.0, beta - 2.0) * std::log(kE + 25.0);
    EXPECT_NEAR(std::abs(v.u1.at(3, 4)), 4.0 * a, 1e-13);
    EXPECT_NEAR(std::abs(v.u2.at(3, 4)), 3.0 * a, 1e-13);
}

TEST(VelocityProperty, DivergenceFree) {
    const GridSpec g = grid_n(32);
    for (double beta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        const Velocity v = compute_velocity(field(g, 9), beta, Symbol::log_power(0.5));
        const SpectralField div = spectral::derivative(v.u1, 1) + spectral::derivative(v.u2, 2);
        EXPECT_LT(max_abs(div), 1e-12) << beta;
    }
}

TEST(VelocityProperty, NonzeroMeanRejected) {
    const GridSpec g = grid_n(8);
    SpectralField q(g);
    q[0] = 1.0;
    EXPECT_THROW((void)compute_velocity(q, 1.0, Symbol::identity()), Error);
}

TEST(Flux, ZeroTheta) {
    const GridSpec g = grid_n(16);
    EXPECT_EQ(max_abs(flux_divergence(field(g, 1), SpectralField(g), 1.0, Symbol::identity())), 0.0);
}

TEST(Flux, BetaTwoIdentityHasNoTransport) {
    const GridSpec g = grid_n(32);
    const SpectralField th = field(g, 4);
    const SpectralField d = flux_divergence(th * -1.0, th, 2.0, Symbol::identity());
    EXPECT_LT(max_abs(d), 1e-13);
}

TEST(FluxProperty, SelfFluxIsAdvection) {
    const GridSpec g = grid_n(32);
    for (double beta : {0.0, 0.7, 1.0, 1.3, 1.8}) {
        const ProteanOperator op(g, beta, Symbol::log_power(0.5), Symbol::log_power(1.0));
        const SpectralField th = field(g, 12);
        const SpectralField flux = op.flux_divergence(th * -1.0, th);
        const SpectralField adv = op.advection(op.velocity(th), th);
        EXPECT_LT(max_abs(flux - adv), 1e-12 * (1.0 + max_abs(adv))) << beta;
    }
}

TEST(FluxProperty, SkewSymmetry) {
    const GridSpec g = grid_n(32);
    for (double beta : {0.0, 0.5, 1.0}) {
        const ProteanOperator op(g, beta, Symbol::identity(), Symbol::log_power(1.0));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const SpectralField q = field(g, seed);
            const SpectralField h = field(g, seed + 100);
            EXPECT_LT(std::abs(spectral::inner(op.flux_divergence(q, h), h)), 1e-12) << beta;
            EXPECT_LT(std::abs(spectral::inner(op.advection(op.velocity(q), h), h)), 1e-12) << beta;
        }
    }
    const ProteanOperator op(g, 1.5, Symbol::identity(), Symbol::log_power(1.0));
    const SpectralField th = field(g, 3);
    EXPECT_LT(std::abs(spectral::inner(op.flux_divergence(th * -1.0, th), th)), 1e-12);
}

TEST(Propagator, UnitWithoutDissipation) {
    MultiplierSuite s;
    s.m = Symbol::constant(0.0);
    for (double f : linear_propagator(grid_n(16), s, 0.0, 0.3)) EXPECT_EQ(f, 1.0);
}

TEST(Propagator, LogDissipationAtModeFive) {
    const GridSpec g = grid_n(32);
    MultiplierSuite s;
    s.m = Symbol::log_power(1.0);
    const auto prop = linear_propagator(g, s, 0.0, 1.0);
    const std::size_t idx = static_cast<std::size_t>(g.index(3)) * g.n + g.index(4);
    EXPECT_NEAR(prop[idx], 1.0 / (kE + 25.0), 1e-15);
    EXPECT_NEAR(1.0 / (kE + 25.0), 0.036078, 1e-6);
    for (double f : prop) {
        EXPECT_GT(f, 0.0);
        EXPECT_LE(f, 1.0);
    }
}

TEST(Propagator, ViscosityAddsLaplacian) {
    const GridSpec g = grid_n(32);
    MultiplierSuite s;
    s.m = Symbol::log_power(1.0);
    const auto prop = linear_propagator(g, s, 0.01, 0.5);
    const std::size_t idx = static_cast<std::size_t>(g.index(3)) * g.n + g.index(4);
    EXPECT_NEAR(prop[idx], std::exp(-0.5 * (std::log(kE + 25.0) + 0.25)), 1e-15);
}

TEST(Integrator, SchemeNames) {
    EXPECT_EQ(parse_scheme("IFRK4"), Scheme::IFRK4);
    EXPECT_EQ(parse_scheme("ifeuler"), Scheme::IFEuler);
    EXPECT_THROW((void)parse_scheme("rk45"), Error);
}

TEST(Integrator, ExactForLinearPart) {
    // y' = -rate y solved exactly for any step size.
    const GridSpec g = grid_n(16);
    const std::vector<double> rate = spectral::radial_table(g, [](double r) { return std::log(kE + r * r) + 0.1 * r * r; });
    const SpectralField y0 = field(g, 5);
    for (Scheme sc : {Scheme::IFRK4, Scheme::IFEuler}) {
        IntegratingFactorStepper st(rate, 0.37, sc);
        State y{y0};
        for (int i = 0; i < 3; ++i) st.step(y, i * 0.37, [&](double, const State&, State& out) { out[0] = SpectralField(g); });
        double worst = 0.0;
        for (std::size_t i = 0; i < y0.size(); ++i) {
            const cplx expect = y0[i] * std::exp(-3 * 0.37 * rate[i]);
            if (std::abs(expect) > 0) worst = std::max(worst, std::abs(y[0][i] - expect) / std::abs(expect));
        }
        EXPECT_LE(worst, 1e-13);
    }
}

TEST(Integrator, FourthOrderOnScalarOde) {
    // y' = -y + y^2 per mode has the closed form y = 1 / (1 + (1/y0 - 1) e^t).
    GridSpec g = grid_n(4);
    std::vector<double> rate(g.size(), 1.0);
    auto solve = [&](double dt) {
        IntegratingFactorStepper st(rate, dt, Scheme::IFRK4);
        State y{SpectralField(g)};
        y[0][0] = 0.5;
        const int n = static_cast<int>(std::lround(1.0 / dt));
        for (int i = 0; i < n; ++i) {
            st.step(y, i * dt, [&](double, const State& in, State& out) {
                out[0] = SpectralField(g);
                for (std::size_t k = 0; k < in[0].size(); ++k) out[0][k] = in[0][k] * in[0][k];
            });
        }
        return y[0][0].real();
    };
    const double exact = 1.0 / (1.0 + std::exp(1.0));
    const double e1 = std::abs(solve(0.1) - exact);
    const double e2 = std::abs(solve(0.05) - exact);
    EXPECT_GT(std::log2(e1 / e2), 3.7);
}

TEST(Integrator, RejectsUnassignedRhs) {
    const GridSpec g = grid_n(8);
    IntegratingFactorStepper st(std::vector<double>(g.size(), 1.0), 0.1, Scheme::IFRK4);
    State y{SpectralField(g)};
    EXPECT_THROW(st.step(y, 0.0, [](double, const State&, State&) {}), Error);
}

TEST(Run, LinearOracle) {
    const RunConfig c = linear_config(64, 1.0);
    const SpectralField th = field(c.grid, 2);
    const RunResult r = run(c, th);
    EXPECT_LE(linear_oracle_error(th, r.trajectory.final_state, r.trajectory.final_time), 1e-10);
    EXPECT_NEAR(r.trajectory.final_time, 1.0, 1e-14);
    // Final L2 against the diagonal formula.
    double e = 0.0;
    const double h = c.grid.dx();
    for (int k1 = -31; k1 < 32; ++k1)
        for (int k2 = -31; k2 < 32; ++k2)
            e += std::norm(th.at(k1, k2)) * std::exp(-2.0 * std::log(kE + k1 * k1 + k2 * k2));
    EXPECT_NEAR(r.norms.rows.back().l2, h * std::sqrt(e), 1e-10 * h * std::sqrt(e));
}

TEST(Run, PrescribedZeroStreamIsPureDecay) {
    RunConfig c;
    c.grid = grid_n(32);
    c.t_final = 0.5;
    c.dt = 0.05;
    c.q_mode = QMode::Prescribed;
    c.q_source = [g = c.grid](double) { return SpectralField(g); };
    const SpectralField th = field(c.grid, 6);
    const RunResult r = run(c, th);
    EXPECT_LE(linear_oracle_error(th, r.trajectory.final_state, 0.5), 1e-13);
}

TEST(Run, ZeroInitialDataStaysZero) {
    RunConfig c;
    c.grid = grid_n(16);
    c.t_final = 0.2;
    const RunResult r = run(c, SpectralField(c.grid));
    EXPECT_EQ(max_abs(r.trajectory.final_state), 0.0);
    for (const auto& row : r.norms.rows) EXPECT_EQ(row.l2, 0.0);
}

TEST(Run, ZeroFinalTimeReturnsInput) {
    RunConfig c;
    c.grid = grid_n(16);
    c.t_final = 0.0;
    const SpectralField th = field(c.grid, 8);
    const RunResult r = run(c, th);
    EXPECT_EQ(max_abs(r.trajectory.final_state - th), 0.0);
    EXPECT_EQ(r.norms.rows.size(), 1u);
}

TEST(RunProperty, MeanPreservedAndL2NonincreasingForEuler) {
    RunConfig c;
    c.grid = grid_n(32);
    c.suite.beta = 0.0;
    c.t_final = 0.5;
    std::vector<double> l2;
    const RunResult r = run(c, field(c.grid, 21), [&](double, const SpectralField& th) {
        EXPECT_EQ(th[0], cplx(0.0, 0.0));
        l2.push_back(spectral::l2_norm(th));
    });
    ASSERT_GT(l2.size(), 10u);
    for (std::size_t i = 1; i < l2.size(); ++i) EXPECT_LE(l2[i], l2[i - 1] * (1 + 1e-14));
    EXPECT_EQ(l2.size(), r.norms.rows.size());
}

TEST(RunProperty, Deterministic) {
    RunConfig c;
    c.grid = grid_n(32);
    c.t_final = 0.2;
    const SpectralField th = field(c.grid, 3);
    EXPECT_EQ(norm_series_csv(run(c, th).norms), norm_series_csv(run(c, th).norms));
}

TEST(Run, AutoStep) {
    RunConfig c;
    c.grid = grid_n(32);
    c.t_final = 1.0;
    const ProteanOperator op(c.grid, c.suite);
    const SpectralField th = field(c.grid, 3, 50.0);
    const double dt = effective_dt(c, op, th);
    const double cfl = 0.5 * c.grid.dx() / op.max_speed(th * -1.0);
    EXPECT_LE(dt, std::min(cfl, 0.01) * (1 + 1e-12));
    EXPECT_NEAR(1.0 / dt, std::round(1.0 / dt), 1e-9);
    // Zero velocity falls back to T / 100.
    EXPECT_NEAR(effective_dt(c, op, SpectralField(c.grid)), 0.01, 1e-15);
}

TEST(Run, CflViolation) {
    RunConfig c;
    c.grid = grid_n(8);
    c.t_final = 1e7;
    c.dt = 0.1;
    const ProteanOperator op(c.grid, c.suite);
    try {
        (void)effective_dt(c, op, SpectralField(c.grid));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CflViolation);
    }
}

TEST(Run, BlowupCarriesLastGoodTime) {
    RunConfig c;
    c.grid = grid_n(16);
    c.t_final = 1.0;
    c.dt = 0.1;
    try {
        (void)run(c, field(c.grid, 1, 1e200));
        ADD_FAILURE();
    } catch (const BlowupError& e) {
        EXPECT_GE(e.last_good_time(), 0.0);
        EXPECT_LT(e.last_good_time(), 1.0);
    }
}

TEST(Run, RejectsNonzeroMean) {
    RunConfig c;
    c.grid = grid_n(8);
    SpectralField th(c.grid);
    th[0] = 1.0;
    EXPECT_THROW((void)run(c, th), Error);
}

TEST(Run, CadenceAndCsvColumns) {
    RunConfig c;
    c.grid = grid_n(16);
    c.t_final = 0.1;
    c.dt = 0.01;
    c.cadence = 3;
    spectral::WeightedNormSpec extra;
    extra.sigma = 1.0;
    c.norm_specs.push_back(extra);
    const RunResult r = run(c, field(c.grid, 2));
    // t = 0, steps 3, 6, 9 and the final step 10.
    ASSERT_EQ(r.norms.rows.size(), 5u);
    EXPECT_NEAR(r.norms.rows.back().t, 0.1, 1e-15);
    const std::string csv = norm_series_csv(r.norms);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "t,l2,linf,sob,diss,gevrey,saturated,extra_0");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
    }
    EXPECT_EQ(rows, 5);
}

TEST(Run, GevreyAtZeroLambdaIsHomogeneousSobolev) {
    RunConfig c;
    c.grid = grid_n(32);
    c.t_final = 0.1;
    spectral::WeightedNormSpec hom;
    hom.sigma = 1.0 + c.suite.beta;
    hom.homogeneous = true;
    c.norm_specs.push_back(hom);
    const RunResult r = run(c, field(c.grid, 2));
    for (const auto& row : r.norms.rows) {
        EXPECT_EQ(row.gevrey, row.extra[0]);
        EXPECT_FALSE(row.saturated);
    }
}
