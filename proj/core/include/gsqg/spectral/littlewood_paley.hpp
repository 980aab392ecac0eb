#pragma once

#include <utility>
#include <vector>

#include "gsqg/spectral/field.hpp"

namespace gsqg::spectral {

/// Smooth cutoff: 1 on [0, 1/2], 0 on [1, inf), C-infinity in between.
double lp_cutoff(double r);

/// Dyadic bump phi(r) = zeta(r/2) - zeta(r), supported in (1/2, 2).
double lp_bump(double r);

/// phi_j(r) = phi(2^-j r).
double lp_bump(int j, double r);

struct LPBlocks {
    int j_min = 0;
    int j_max = 0;
    SpectralField low;                               ///< S_{j_min} f
    std::vector<std::pair<int, SpectralField>> blocks;  ///< (j, Delta_j f), j = j_min..j_max

    [[nodiscard]] const SpectralField& block(int j) const;
    /// low + sum of blocks.
    [[nodiscard]] SpectralField reconstruct() const;
};

/// Smallest j_max with 2^j_max covering the largest grid wavenumber.
int default_j_max(const GridSpec& grid);

/// Throws RangeTooNarrow when j_min > j_max or 2^j_max is below the largest grid |k|.
LPBlocks lp_partition(const SpectralField& f, int j_min, int j_max);

/// Single block Delta_j f.
SpectralField lp_block(const SpectralField& f, int j);

/// Low-frequency part S_j f = zeta(2^-j |D|) f.
SpectralField lp_low(const SpectralField& f, int j);

}  // namespace gsqg::spectral
