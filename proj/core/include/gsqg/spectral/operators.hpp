#pragma once

#include <functional>
#include <vector>

#include "gsqg/multipliers/symbol.hpp"
#include "gsqg/spectral/field.hpp"

namespace gsqg::spectral {

using multipliers::Symbol;

enum class ZeroModeRule { Zero, Keep, Error };

/// Per-mode values fn(|k|), evaluated once per distinct |k| on the grid.
std::vector<double> radial_table(const GridSpec& grid, const std::function<double(double)>& fn);

/// Per-mode symbol values. For symbols singular at the origin the k = 0 entry
/// follows rule: 0 (Zero), 1 (Keep) or SingularAtOrigin (Error).
std::vector<double> symbol_table(const GridSpec& grid, const Symbol& sym, ZeroModeRule rule = ZeroModeRule::Error);

/// Coefficient-wise product with a per-mode real table.
SpectralField apply_table(const SpectralField& f, const std::vector<double>& table);

SpectralField apply_multiplier(const SpectralField& f, const Symbol& sym, ZeroModeRule rule = ZeroModeRule::Error);

/// Spectral partial derivative along axis ell in {1, 2}; Nyquist modes map to 0.
SpectralField derivative(const SpectralField& f, int ell);

/// 1 where max(|k1|, |k2|) <= dealias * N/2 (integer wavenumbers), else 0.
std::vector<double> dealias_mask(const GridSpec& grid);

/// True when every coefficient outside the mask is zero.
bool within_mask(const SpectralField& f, const std::vector<double>& mask);

/// Embeds f into an M x M grid (M >= N) with the same box, dropping Nyquist
/// modes. Coefficients are rescaled so the represented function is unchanged.
SpectralField pad(const SpectralField& f, int m);

/// Restricts f to an N x N grid, keeping modes with |k_i| < N/2.
SpectralField truncate(const SpectralField& f, int n);

/// Pointwise product evaluated on an M x M grid; exact when M exceeds the
/// combined bandwidth of f and g. The result lives on the M grid.
SpectralField padded_product(const SpectralField& f, const SpectralField& g, int m);

/// |k| per mode in physical units.
std::vector<double> radius_table(const GridSpec& grid);

}  // namespace gsqg::spectral
