#pragma once

#include <filesystem>

#include "gsqg/spectral/field.hpp"

namespace gsqg::spectral {

/// Little-endian file: "GSQG", u32 version = 1, u32 N, f64 box, then N*N f64
/// physical samples in row-major order. Written atomically.
void write_snapshot(const std::filesystem::path& path, const PhysicalField& field);

/// Throws IoError for missing, truncated or malformed files.
PhysicalField read_snapshot(const std::filesystem::path& path);

}  // namespace gsqg::spectral
