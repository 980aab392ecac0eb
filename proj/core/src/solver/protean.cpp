#include "gsqg/solver/protean.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/operators.hpp"

namespace gsqg::solver {

using spectral::cplx;
using spectral::PhysicalField;
using spectral::ZeroModeRule;
using spectral::times_ik;

namespace {

// Per-mode derivative factors; Nyquist rows and columns are zero.
std::vector<double> axis_table(const GridSpec& g, int ell) {
    const int n = g.n;
    std::vector<double> out(g.size(), 0.0);
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            const int i = ell == 1 ? i1 : i2;
            if (i == n / 2) continue;
            out[static_cast<std::size_t>(i1) * n + i2] = g.wavenumber(i) * g.k_unit();
        }
    }
    return out;
}

PhysicalField product(const PhysicalField& a, const PhysicalField& b) {
    PhysicalField out(a.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

}  // namespace

ProteanOperator::ProteanOperator(const GridSpec& grid, const MultiplierSuite& suite, double eps_visc)
    : ProteanOperator(grid, suite.beta, suite.p(), suite.m, eps_visc) {}

ProteanOperator::ProteanOperator(const GridSpec& grid, double beta, const Symbol& p, const Symbol& m,
                                 double eps_visc)
    : grid_(grid), beta_(beta), eps_visc_(eps_visc) {
    grid_.validate();
    if (!(beta >= 0.0 && beta <= 2.0)) throw Error(Errc::InvalidArgument, "beta must lie in [0, 2]");
    if (!(eps_visc >= 0.0) || !std::isfinite(eps_visc)) {
        throw Error(Errc::InvalidArgument, "artificial viscosity must be finite and non-negative");
    }
    const Symbol a = Symbol::power_law(beta - 2.0) * p;
    a_ = spectral::symbol_table(grid_, a, ZeroModeRule::Zero);
    a_[0] = 0.0;
    const std::vector<double> m_table = spectral::symbol_table(grid_, m, ZeroModeRule::Zero);
    const std::vector<double> radius = spectral::radius_table(grid_);
    rate_.resize(grid_.size());
    for (std::size_t i = 0; i < rate_.size(); ++i) {
        rate_[i] = m_table[i] + eps_visc * radius[i] * radius[i];
        if (!std::isfinite(rate_[i]) || rate_[i] < 0.0) {
            throw Error(Errc::InvalidArgument, "dissipation rate must be finite and non-negative on the grid");
        }
    }
    mask_ = spectral::dealias_mask(grid_);
    k1_ = axis_table(grid_, 1);
    k2_ = axis_table(grid_, 2);
}

void ProteanOperator::check_grid(const SpectralField& f) const {
    if (!(f.grid() == grid_)) throw Error(Errc::ShapeMismatch, "field grid does not match the operator grid");
}

SpectralField ProteanOperator::dealias(const SpectralField& f) const {
    check_grid(f);
    return spectral::apply_table(f, mask_);
}

Velocity ProteanOperator::velocity(const SpectralField& q) const {
    check_grid(q);
    if (!q.zero_mean()) throw Error(Errc::ZeroModeUndefined, "velocity of a field with nonzero mean");
    Velocity v{SpectralField(grid_), SpectralField(grid_)};
    const auto c = q.coeffs();
    auto u1 = v.u1.coeffs();
    auto u2 = v.u2.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const cplx aq = a_[i] * c[i];
        u1[i] = times_ik(k2_[i], aq);
        u2[i] = times_ik(-k1_[i], aq);
    }
    return v;
}

SpectralField ProteanOperator::advection(const Velocity& u, const SpectralField& theta) const {
    check_grid(theta);
    const SpectralField t = dealias(theta);
    SpectralField d1(grid_);
    SpectralField d2(grid_);
    const auto c = t.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        d1[i] = times_ik(k1_[i], c[i]);
        d2[i] = times_ik(k2_[i], c[i]);
    }
    const PhysicalField a1 = spectral::transform_backward(dealias(u.u1));
    const PhysicalField a2 = spectral::transform_backward(dealias(u.u2));
    const PhysicalField g1 = spectral::transform_backward(d1);
    const PhysicalField g2 = spectral::transform_backward(d2);
    PhysicalField out(grid_);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = a1.values[i] * g1.values[i] + a2.values[i] * g2.values[i];
    }
    SpectralField f = spectral::transform_forward(out);
    f = dealias(f);
    f[0] = 0.0;
    return f;
}

SpectralField ProteanOperator::flux_divergence(const SpectralField& q, const SpectralField& theta) const {
    check_grid(q);
    check_grid(theta);
    if (!q.zero_mean()) throw Error(Errc::ZeroModeUndefined, "flux with a nonzero-mean q");
    const SpectralField qm = dealias(q);
    const SpectralField tm = dealias(theta);
    const auto qc = qm.coeffs();
    const auto tc = tm.coeffs();
    const std::size_t size = grid_.size();

    // w = perp-grad a(D) q = (-d2 aq, d1 aq)
    SpectralField w1(grid_);
    SpectralField w2(grid_);
    for (std::size_t i = 0; i < size; ++i) {
        const cplx aq = a_[i] * qc[i];
        w1[i] = times_ik(-k2_[i], aq);
        w2[i] = times_ik(k1_[i], aq);
    }
    const PhysicalField tp = spectral::transform_backward(tm);
    const SpectralField p1 = spectral::transform_forward(product(spectral::transform_backward(w1), tp));
    const SpectralField p2 = spectral::transform_forward(product(spectral::transform_backward(w2), tp));

    SpectralField out(grid_);
    for (std::size_t i = 0; i < size; ++i) {
        out[i] = mask_[i] * (times_ik(k1_[i], p1[i]) + times_ik(k2_[i], p2[i]));
    }

    if (beta_ > 1.0) {
        // a(D) Div((perp-grad theta) q)
        SpectralField r1(grid_);
        SpectralField r2(grid_);
        for (std::size_t i = 0; i < size; ++i) {
            r1[i] = times_ik(-k2_[i], tc[i]);
            r2[i] = times_ik(k1_[i], tc[i]);
        }
        const PhysicalField qp = spectral::transform_backward(qm);
        const SpectralField s1 = spectral::transform_forward(product(spectral::transform_backward(r1), qp));
        const SpectralField s2 = spectral::transform_forward(product(spectral::transform_backward(r2), qp));
        for (std::size_t i = 0; i < size; ++i) {
            out[i] += mask_[i] * a_[i] * (times_ik(k1_[i], s1[i]) + times_ik(k2_[i], s2[i]));
        }
    }
    out[0] = 0.0;
    return out;
}

double ProteanOperator::max_speed(const SpectralField& q) const {
    const Velocity v = velocity(q);
    const PhysicalField a = spectral::transform_backward(v.u1);
    const PhysicalField b = spectral::transform_backward(v.u2);
    double best = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) best = std::max(best, std::hypot(a.values[i], b.values[i]));
    return best;
}

std::vector<double> ProteanOperator::propagator(double dt) const {
    if (!(dt >= 0.0) || !std::isfinite(dt)) throw Error(Errc::InvalidArgument, "time step must be finite and >= 0");
    std::vector<double> out(rate_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(-dt * rate_[i]);
    return out;
}

Velocity compute_velocity(const SpectralField& q, double beta, const Symbol& p) {
    return ProteanOperator(q.grid(), beta, p, Symbol::constant(0.0)).velocity(q);
}

SpectralField flux_divergence(const SpectralField& q, const SpectralField& theta, double beta, const Symbol& p) {
    return ProteanOperator(theta.grid(), beta, p, Symbol::constant(0.0)).flux_divergence(q, theta);
}

std::vector<double> linear_propagator(const GridSpec& grid, const MultiplierSuite& suite, double eps_visc, double dt) {
    if (!(dt > 0.0)) throw Error(Errc::InvalidArgument, "time step must be positive");
    return ProteanOperator(grid, suite, eps_visc).propagator(dt);
}

}  // namespace gsqg::solver
