#include "gsqg/solver/integrator.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg::solver {

std::string_view to_string(Scheme s) noexcept {
    return s == Scheme::IFRK4 ? "ifrk4" : "ifeuler";
}

Scheme parse_scheme(std::string_view text) {
    std::string lower(text);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "ifrk4") return Scheme::IFRK4;
    if (lower == "ifeuler") return Scheme::IFEuler;
    throw Error(Errc::InvalidArgument, "unknown scheme '" + std::string(text) + "'");
}

IntegratingFactorStepper::IntegratingFactorStepper(const std::vector<double>& rate, double dt, Scheme scheme)
    : dt_(dt), scheme_(scheme), e_full_(rate.size()), e_half_(rate.size()) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(Errc::InvalidArgument, "time step must be positive and finite");
    for (std::size_t i = 0; i < rate.size(); ++i) {
        e_full_[i] = std::exp(-dt * rate[i]);
        e_half_[i] = std::exp(-0.5 * dt * rate[i]);
    }
}

void IntegratingFactorStepper::step(State& y, double t, const Rhs& rhs) {
    const std::size_t nf = y.size();
    for (const auto& f : y) {
        if (f.size() != e_full_.size()) throw Error(Errc::ShapeMismatch, "state field does not match the stepper grid");
    }
    auto resize = [&](State& s) {
        if (s.size() != nf) s.assign(nf, SpectralField());
    };
    auto eval = [&](double tt, const State& in, State& out) {
        rhs(tt, in, out);
        for (const auto& f : out) {
            if (f.size() != e_full_.size()) throw Error(Errc::ShapeMismatch, "right-hand side returned a mis-sized field");
        }
    };
    resize(k1_);
    eval(t, y, k1_);

    if (scheme_ == Scheme::IFEuler) {
        for (std::size_t f = 0; f < nf; ++f) {
            auto c = y[f].coeffs();
            const auto k = k1_[f].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = e_full_[i] * (c[i] + dt_ * k[i]);
        }
        return;
    }

    resize(k2_);
    resize(k3_);
    resize(k4_);
    const double h = dt_;

    // Stage 2: E2 (y + h/2 k1)
    tmp_ = y;
    for (std::size_t f = 0; f < nf; ++f) {
        auto c = tmp_[f].coeffs();
        const auto k = k1_[f].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = e_half_[i] * (c[i] + 0.5 * h * k[i]);
    }
    eval(t + 0.5 * h, tmp_, k2_);

    // Stage 3: E2 y + h/2 k2
    for (std::size_t f = 0; f < nf; ++f) {
        auto c = tmp_[f].coeffs();
        const auto yc = y[f].coeffs();
        const auto k = k2_[f].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = e_half_[i] * yc[i] + 0.5 * h * k[i];
    }
    eval(t + 0.5 * h, tmp_, k3_);

    // Stage 4: E y + h E2 k3
    for (std::size_t f = 0; f < nf; ++f) {
        auto c = tmp_[f].coeffs();
        const auto yc = y[f].coeffs();
        const auto k = k3_[f].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = e_full_[i] * yc[i] + h * e_half_[i] * k[i];
    }
    eval(t + h, tmp_, k4_);

    for (std::size_t f = 0; f < nf; ++f) {
        auto c = y[f].coeffs();
        const auto a = k1_[f].coeffs();
        const auto b = k2_[f].coeffs();
        const auto d = k3_[f].coeffs();
        const auto e = k4_[f].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = e_full_[i] * (c[i] + h / 6.0 * a[i]) + h / 3.0 * e_half_[i] * (b[i] + d[i]) + h / 6.0 * e[i];
        }
    }
}

}  // namespace gsqg::solver
