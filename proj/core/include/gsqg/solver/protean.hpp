#pragma once

#include <vector>

#include "gsqg/multipliers/admissibility.hpp"
#include "gsqg/spectral/field.hpp"

namespace gsqg::solver {

using multipliers::MultiplierSuite;
using multipliers::Symbol;
using spectral::GridSpec;
using spectral::SpectralField;

struct Velocity {
    SpectralField u1;
    SpectralField u2;
};

/// Discrete operators of the protean system
///
///     d/dt theta + Div F_q(theta) = -m(D) theta - eps |D|^2 theta + G
///
/// with F_q(theta) = (perp-grad a(D) q) theta, plus a(D)((perp-grad theta) q)
/// when beta > 1, and a(r) = r^(beta-2) p(r). Tables are built once.
class ProteanOperator {
public:
    ProteanOperator(const GridSpec& grid, const MultiplierSuite& suite, double eps_visc = 0.0);
    ProteanOperator(const GridSpec& grid, double beta, const Symbol& p, const Symbol& m, double eps_visc = 0.0);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double eps_visc() const noexcept { return eps_visc_; }

    /// v(q) = -perp-grad a(D) q, i.e. u1 = i k2 a q, u2 = -i k1 a q.
    /// Throws ZeroModeUndefined if q has nonzero mean.
    [[nodiscard]] Velocity velocity(const SpectralField& q) const;

    /// Div F_q(theta) with 2/3-rule dealiasing of inputs and output.
    [[nodiscard]] SpectralField flux_divergence(const SpectralField& q, const SpectralField& theta) const;

    /// Dealiased u . grad theta.
    [[nodiscard]] SpectralField advection(const Velocity& u, const SpectralField& theta) const;

    /// max over physical samples of |v(q)|.
    [[nodiscard]] double max_speed(const SpectralField& q) const;

    /// m(|k|) + eps |k|^2 per mode.
    [[nodiscard]] const std::vector<double>& rate() const noexcept { return rate_; }
    /// exp(-dt rate) per mode.
    [[nodiscard]] std::vector<double> propagator(double dt) const;
    [[nodiscard]] const std::vector<double>& mask() const noexcept { return mask_; }
    [[nodiscard]] const std::vector<double>& a_table() const noexcept { return a_; }
    [[nodiscard]] SpectralField dealias(const SpectralField& f) const;

private:
    void check_grid(const SpectralField& f) const;

    GridSpec grid_;
    double beta_;
    double eps_visc_;
    std::vector<double> a_;
    std::vector<double> rate_;
    std::vector<double> mask_;
    std::vector<double> k1_;
    std::vector<double> k2_;
};

/// Free-function forms, building the tables on each call.
Velocity compute_velocity(const SpectralField& q, double beta, const Symbol& p);
SpectralField flux_divergence(const SpectralField& q, const SpectralField& theta, double beta, const Symbol& p);
std::vector<double> linear_propagator(const GridSpec& grid, const MultiplierSuite& suite, double eps_visc, double dt);

}  // namespace gsqg::solver
