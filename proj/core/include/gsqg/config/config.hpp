#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gsqg/multipliers/admissibility.hpp"
#include "gsqg/solver/integrator.hpp"
#include "gsqg/solver/run.hpp"
#include "gsqg/spectral/field.hpp"

namespace gsqg::config {

enum class InitKind { Random, File, Named };

struct InitSpec {
    InitKind kind = InitKind::Random;
    std::string name = "sin_sin";  ///< for Named
    std::filesystem::path path;    ///< for File
    double amplitude = 1.0;        ///< L2 norm for Random, scale factor for Named
    double decay = 3.0;            ///< spectral decay exponent for Random
};

/// Parsed configuration file.
///
///     [grid]   n, box, dealias
///     [suite]  beta, gamma, m, p_a, p_b, omega_a, omega_b, nu
///     [run]    dt (real or "auto"), t_final, scheme, eps_visc, lambda_track, seed, cadence
///     [init]   kind (random | file | named), name, path, amplitude, decay
///     [output] dir
///
/// Symbols use the expression grammar of multipliers::parse_symbol.
struct Config {
    spectral::GridSpec grid;
    multipliers::MultiplierSuite suite;
    std::optional<double> dt;
    double t_final = 1.0;
    solver::Scheme scheme = solver::Scheme::IFRK4;
    double eps_visc = 0.0;
    double lambda_track = 0.0;
    std::uint64_t seed = 0;
    int cadence = 1;
    InitSpec init;
    std::filesystem::path out_dir = "out";

    /// Canonical text form; parse(serialize()) reproduces this config.
    [[nodiscard]] std::string serialize() const;
    /// 64-bit FNV-1a of serialize(), as 16 hex digits.
    [[nodiscard]] std::string digest() const;
};

/// Throws ParseError (1-based line and column) for malformed input, unknown
/// sections or keys, duplicate keys and invalid values.
Config parse_config(std::string_view text);

/// Reads and parses a file; IoError when it cannot be read.
Config load_config(const std::filesystem::path& path);

/// Builds the initial field described by [init]; the mean is removed.
spectral::SpectralField initial_field(const Config& config);

/// Solver settings for a plain run of this config.
solver::RunConfig run_config(const Config& config);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace gsqg::config
