#pragma once

#include <cstdint>
#include <vector>

#include "gsqg/harness/experiments.hpp"
#include "gsqg/multipliers/admissibility.hpp"
#include "gsqg/spectral/field.hpp"

namespace gsqg::harness {

using multipliers::MultiplierSuite;
using spectral::GridSpec;

struct ProbeSample {
    int j = 0;
    int trial = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  ///< lhs / rhs, 0 when both vanish
    std::vector<std::uint64_t> seeds;
};

/// Localized: f, h in A_j, bound (p Gamma + p_a / omega)(2^j) 2^(eps j) ||g||_{H^(2-s-eps)_omega} ||f|| ||h||.
/// NonLocalized: bound ||g||_{H^(2-s-delta)} (||p_a f||_{H^eps} ||h|| + ||p_a h||_{H^eps} ||f||), delta = eps / 2.
/// Gevrey: operator omega Lambda^r E^lambda_nu Delta_j d_l, h in A_j, unit auxiliary weights and
/// Gamma = omega m1^(gamma/2).
enum class CommutatorVariant { Localized, NonLocalized, Gevrey };

struct CommutatorProbeSpec {
    CommutatorVariant variant = CommutatorVariant::Localized;
    GridSpec grid{};
    MultiplierSuite suite{};
    double s = 0.25;
    double eps = 0.25;
    // Gevrey variant
    double r = 0.0;
    double s_first = 0.5;
    double s_second = 0.5;
    double lambda = 0.0;

    int ell = 1;
    int j_min = 3;
    int j_max = 5;
    int trials = 20;
    int g_k_max = 4;     ///< max-norm cutoff of the smooth factor g
    std::uint64_t seed = 1;
    bool constant_g = false;
    /// h = projection of [A, g] f onto A_j, the maximizer of the pairing over h in A_j.
    /// A random annulus field otherwise.
    bool adversarial_h = true;
};

/// Throws InvalidArgument for s, eps or r outside the admissible range.
std::vector<ProbeSample> probe_commutator(const CommutatorProbeSpec& spec);

/// [A, g] f projected onto the annulus of shell j.
SpectralField commutator_projection(const SpectralField& f, const SpectralField& g, const CommutatorProbeSpec& spec, int j);

/// Re <A(g f) - g A f, h> with products formed exactly on a 2N grid.
double commutator_pairing(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                          const CommutatorProbeSpec& spec, int j);

/// Same pairing as an explicit sum over interacting wavevector triads.
double commutator_pairing_triads(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                                 const CommutatorProbeSpec& spec, int j);

/// f localized in A_j, g smooth; lhs = ||Delta_j(f g)||, bound with C = c_j = 1 and
/// Gamma = omega m1^(gamma/2).
struct ProductProbeSpec {
    GridSpec grid{};
    MultiplierSuite suite{};
    double s = 0.5;
    double s_bar = 1.0;
    int j_min = 3;
    int j_max = 5;
    int trials = 20;
    int g_k_max = 4;
    std::uint64_t seed = 1;
};

std::vector<ProbeSample> probe_product(const ProductProbeSpec& spec);

/// ||f g - T_f g - T_g f - R(f, g)|| / ||f g|| with the paraproducts built from
/// Littlewood-Paley blocks on a 2N grid.
double bony_residual(const SpectralField& f, const SpectralField& g);

/// Max ratio over samples and the per-shell maxima, keyed by j ascending.
struct ShellSummary {
    double max_ratio = 0.0;
    std::vector<std::pair<int, double>> per_shell;
    /// max / min of the two largest shells' maxima.
    [[nodiscard]] double top_variation() const;
};
ShellSummary summarize(const std::vector<ProbeSample>& samples);

/// Disagreement cells of a threshold scan against the rule mu > mutilde + 1/2.
struct ThresholdComparison {
    int disagreements = 0;
    int non_adjacent = 0;  ///< disagreements farther than one grid step from the threshold
    int max_per_column = 0;
};
ThresholdComparison compare_threshold(const multipliers::ThresholdScan& scan, double mu_step);

// Report wrappers.
ExperimentReport exp_commutator(const Config& cfg, const ArtifactDir& dir = {});
ExperimentReport exp_product(const Config& cfg, const ArtifactDir& dir = {});
ExperimentReport exp_lp_machinery(const Config& cfg, const ArtifactDir& dir = {});
ExperimentReport exp_log_identity(const Config& cfg, const ArtifactDir& dir = {});
ExperimentReport exp_threshold(const Config& cfg, multipliers::LogFamily family, const ArtifactDir& dir = {});

}  // namespace gsqg::harness
