#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gsqg/spectral/field.hpp"

namespace gsqg::spectral {

/// Gaussian random field with Hermitian symmetry and zero mean.
struct RandomFieldSpec {
    std::uint64_t seed = 0;
    double amplitude = 1.0;       ///< target L2 norm on the torus
    double spectral_decay = 3.0;  ///< |c_k| standard deviation ~ (1 + |k|)^-decay
    double k_max = 0.0;           ///< keep |k| <= k_max (integer units); 0 means the dealias cut
    /// Restrict to the annulus k_lo < |k| < k_hi (physical units).
    std::optional<std::pair<double, double>> annulus;
    bool flat_spectrum = false;   ///< ignore spectral_decay
};

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec);

/// Named deterministic fields: "sin_sin" = sin x1 sin x2, "sin_x1" = sin x1,
/// "cos_sum" = cos(x1 + x2), "vortex" = exp(-4|x - c|^2) - mean, "zero".
/// Throws InvalidArgument for an unknown name.
SpectralField named_field(const GridSpec& grid, const std::string& name);

}  // namespace gsqg::spectral
