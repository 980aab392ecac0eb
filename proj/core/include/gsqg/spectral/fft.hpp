#pragma once

#include "gsqg/spectral/field.hpp"

namespace gsqg::spectral {

/// Unitary forward transform of real samples. The result is exactly Hermitian.
SpectralField transform_forward(const PhysicalField& samples);

/// Inverse of transform_forward. Only the k2 >= 0 half of the spectrum is read,
/// so the input is treated as Hermitian.
PhysicalField transform_backward(const SpectralField& field);

}  // namespace gsqg::spectral
