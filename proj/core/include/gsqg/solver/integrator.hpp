#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "gsqg/spectral/field.hpp"

namespace gsqg::solver {

using spectral::SpectralField;

enum class Scheme { IFRK4, IFEuler };

std::string_view to_string(Scheme s) noexcept;
/// Accepts "ifrk4" and "ifeuler" (case-insensitive). Throws InvalidArgument.
Scheme parse_scheme(std::string_view text);

using State = std::vector<SpectralField>;

/// Nonlinear part N(t, y) of y' = -rate y + N(t, y). Must assign every field of out,
/// which arrives default-constructed on the first call.
using Rhs = std::function<void(double t, const State& y, State& out)>;

/// Integrating-factor stepper for a state of fields sharing one diagonal
/// linear part. The linear decay is applied exactly through exp(-dt rate).
class IntegratingFactorStepper {
public:
    IntegratingFactorStepper(const std::vector<double>& rate, double dt, Scheme scheme);

    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] Scheme scheme() const noexcept { return scheme_; }

    /// Advances y from t to t + dt in place.
    void step(State& y, double t, const Rhs& rhs);

private:
    double dt_;
    Scheme scheme_;
    std::vector<double> e_full_;
    std::vector<double> e_half_;
    State k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace gsqg::solver
