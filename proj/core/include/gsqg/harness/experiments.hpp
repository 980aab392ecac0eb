#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/config/config.hpp"
#include "gsqg/harness/report.hpp"
#include "gsqg/spectral/field.hpp"

namespace gsqg::harness {

using config::Config;
using spectral::SpectralField;

/// Directory for CSV artifacts; nothing is written when empty.
using ArtifactDir = std::optional<std::filesystem::path>;

/// L2 energy balance ||theta(t)||^2 + 2 int_0^t ||m^(1/2) theta||^2 = ||theta_0||^2
/// (trapezoid rule in time) and, separately, L2 conservation with m = 0.
struct EnergyOptions {
    double dt = 2.5e-4;          ///< used when the config leaves dt on auto
    double tol = 1e-6;
    double inviscid_tol = 1e-8;
    bool inviscid_check = true;
};
ExperimentReport exp_energy_balance(const Config& cfg, const EnergyOptions& opts = {}, const ArtifactDir& dir = {});

/// L^p norms for p = 2, 4, 8 and infinity never exceed (1 + tol) times their
/// initial value. The suite is replaced by beta = 0, m = LogPower(1),
/// p = IterLogPower(gamma).
struct MaxPrincipleOptions {
    std::vector<double> gammas{0.0, 1.0};
    std::vector<std::string> fields{"sin_sin", "random"};
    double tol = 5e-3;
};
ExperimentReport exp_max_principle(const Config& cfg, const MaxPrincipleOptions& opts = {}, const ArtifactDir& dir = {});

/// Pointwise Phi'(f) L f - L Phi(f) with L = ln(1 - Laplacian).
enum class ConvexPhi { Square, FourthPower };
struct ConvexityResult {
    double min_value = 0.0;
    double scale = 0.0;  ///< max |Phi'(f) L f|
    bool pass = false;
};
/// f must have no content with max(|k1|, |k2|) > N/3. Evaluated on a 3N grid.
ConvexityResult probe_convexity(const SpectralField& f, ConvexPhi phi, double tol = 1e-8);

struct ConvexityOptions {
    int trials = 20;
    double tol = 1e-8;
};
ExperimentReport exp_convexity(const Config& cfg, const ConvexityOptions& opts = {}, const ArtifactDir& dir = {});

/// Gevrey norm tracks for lambda in {lambda*, lambda*/2} stay finite, unsaturated
/// and below growth_cap times their initial value. A lambda = 0 track must equal
/// the plain homogeneous H^{1+beta}_omega norm bit for bit.
struct SmoothingOptions {
    double lambda_star = 0.05;
    double growth_cap = 10.0;
};
ExperimentReport exp_smoothing(const Config& cfg, const SmoothingOptions& opts = {}, const ArtifactDir& dir = {});

/// Norm of the difference space: L2_omega and homogeneous H^-1_omega for beta = 0,
/// L2_omega for beta in (0, 1), H^beta_omega for beta in [1, 2].
double y_norm(const SpectralField& f, const multipliers::MultiplierSuite& suite);

/// Twin runs from theta_0 and theta_0 + delta phi; fits the log-log slope of
/// sup_t ||Theta||_Y against delta.
struct StabilityOptions {
    std::vector<double> deltas{1e-2, 1e-3, 1e-4};
    double slope_tol = 0.1;
    double c_max = 1e3;
    double twin_tol = 1e-13;
};
ExperimentReport exp_stability(const Config& cfg, const StabilityOptions& opts = {}, const ArtifactDir& dir = {});

/// Integrates theta, theta^n and the split systems for the gradient pieces and
/// checks d_l theta^n = varsigma_l + zeta_l at every step.
struct KatoOptions {
    double delta = 1e-2;
    double tol = 1e-8;
};
ExperimentReport exp_kato_split(const Config& cfg, const KatoOptions& opts = {}, const ArtifactDir& dir = {});

/// Long run with beta = 0, m = LogPower(1), p = IterLogPower(gamma).
struct GlobalEulerOptions {
    double gamma = 1.0;
    double growth_cap = 100.0;
    double sobolev_delta = 0.5;
};
ExperimentReport exp_global_euler(const Config& cfg, const GlobalEulerOptions& opts = {}, const ArtifactDir& dir = {});

/// Runs with artificial viscosity approach the inviscid run at time T, each error
/// at most ratio times the previous one.
struct ViscosityOptions {
    std::vector<double> eps{1e-2, 1e-3, 1e-4};
    double ratio = 0.5;
};
ExperimentReport exp_viscosity(const Config& cfg, const ViscosityOptions& opts = {}, const ArtifactDir& dir = {});

/// Names accepted by run_experiment, in canonical order.
const std::vector<std::string>& experiment_names();

/// Runs a named experiment with default options. Throws UsageError for unknown names.
ExperimentReport run_experiment(const std::string& name, const Config& cfg, const ArtifactDir& dir = {});

}  // namespace gsqg::harness
