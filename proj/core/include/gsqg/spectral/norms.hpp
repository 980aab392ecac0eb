#pragma once

#include <optional>

#include "gsqg/multipliers/symbol.hpp"
#include "gsqg/spectral/field.hpp"
#include "gsqg/spectral/littlewood_paley.hpp"

namespace gsqg::spectral {

using multipliers::Symbol;

struct GevreySpec {
    double lambda = 0.0;
    Symbol nu = Symbol::log_power(1.0);
};

/// Weight w(k) = |k|^sigma omega(|k|) e^(lambda nu(|k|)) (homogeneous, k = 0
/// excluded) or (1 + |k|^2)^(sigma/2) omega(|k|) e^(lambda nu(|k|)).
struct WeightedNormSpec {
    double sigma = 0.0;
    Symbol omega = Symbol::identity();
    bool homogeneous = false;
    std::optional<GevreySpec> gevrey;
};

struct NormValue {
    double value = 0.0;
    bool saturated = false;  ///< the Gevrey exponent was capped at kGevreyCap
};

inline constexpr double kGevreyCap = 700.0;

/// Torus norm (L^2 normalization matches l2_norm).
/// Throws ZeroModeUndefined for homogeneous sigma < 0 with nonzero mean.
NormValue weighted_norm(const SpectralField& f, const WeightedNormSpec& spec);

/// Per-mode weights of a spec, for callers that reuse them across many fields.
struct WeightTable {
    std::vector<double> weight;
    bool saturated = false;
};
WeightTable weight_table(const GridSpec& grid, const WeightedNormSpec& spec);

/// sqrt(dx^2 sum w^2 |c|^2) with a precomputed table.
double weighted_norm(const SpectralField& f, const WeightTable& table);

/// (dx^2 sum |f|^p)^(1/p) over physical samples.
double lp_norm(const PhysicalField& f, double p);
double linf_norm(const PhysicalField& f);

/// (sum_j 2^(2 sigma j) ||omega(D) Delta_j f||^2)^(1/2); the low part counts as
/// the block j_min - 1.
double besov_norm(const LPBlocks& blocks, double sigma, const Symbol& omega = Symbol::identity());

/// ||Lambda^sigma Delta_j f|| / (2^(sigma j) ||Delta_j f||).
/// Throws EmptyBlock for a zero block and LocalizationViolated when the block
/// has content outside 2^(j-1) < |k| < 2^(j+1).
double bernstein_probe(int j, const SpectralField& block, double sigma);

}  // namespace gsqg::spectral
