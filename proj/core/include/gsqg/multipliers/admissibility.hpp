#pragma once

#include <span>
#include <vector>

#include "gsqg/multipliers/class_check.hpp"
#include "gsqg/multipliers/quadrature.hpp"
#include "gsqg/multipliers/symbol.hpp"

namespace gsqg::multipliers {

/// The multiplier quintuple (m, p = p_a/p_b, omega = omega_a/omega_b, nu, gamma)
/// together with the velocity exponent beta.
struct MultiplierSuite {
    Symbol m = Symbol::log_power(1.0);
    Symbol p_a = Symbol::identity();
    Symbol p_b = Symbol::identity();
    Symbol omega_a = Symbol::identity();
    Symbol omega_b = Symbol::identity();
    Symbol nu = Symbol::log_power(1.0);
    double gamma = 0.75;
    double beta = 1.0;

    [[nodiscard]] Symbol p() const;
    [[nodiscard]] Symbol omega() const;
    /// 1 + m.
    [[nodiscard]] Symbol m1() const;
    /// r^(beta-2) p(r), the streamfunction multiplier.
    [[nodiscard]] Symbol a() const;

    /// Checks the structural invariants (m1 >= 1, factors nonnegative and
    /// nondecreasing, nu satisfies S1) on the given grid. Throws InvalidArgument.
    void validate(const RGrid& grid = {}) const;
};

/// Suite for the logarithmic families: m = L^mu, p = L^mutilde with L the
/// log (or iterated log) power, omega = 1 for the log family and
/// LogPower(1/2) for the iterated family. nu = m.
enum class LogFamily { Log, IterLog };
MultiplierSuite log_family_suite(LogFamily family, double mu, double mutilde, double beta = 1.0);

/// Log-spaced y grid for the admissibility suprema.
///
/// The growth test compares the sup over y in [y_max^(1/2), y_max] with the
/// sup over [y_max^(1/4), y_max^(1/2)], i.e. consecutive octaves in ln y.
struct YGrid {
    double y_min = 1e-3;
    double y_max = 1e200;
    int points_per_decade = 4;
    double trend_tol = 1e-3;

    [[nodiscard]] std::vector<double> points() const;
};

/// Cumulative quadrature data for condition sup1, independent of m and gamma.
struct AdmissibilityProfile {
    std::vector<double> y;
    std::vector<double> integral;  ///< I(y)
    std::vector<double> pa_omegab; ///< p_a(y) omega_b(y)
    std::vector<double> m1;        ///< 1 + m(y)
};

AdmissibilityProfile admissibility_profile(const MultiplierSuite& suite, const YGrid& grid = {},
                                           const QuadratureSpec& quad = {});

struct AdmissibilityResult {
    double gamma = 0.0;
    double sup1 = 0.0;
    double sup2 = 0.0;
    bool sup1_finite = false;
    bool sup2_finite = false;
    double sup1_trend = 0.0;  ///< sup over the top octave / sup over the one below
    double sup2_trend = 0.0;
    bool admissible = false;
    bool heuristic = true;    ///< grid surrogate for a sup over all y > 0
};

AdmissibilityResult evaluate_admissibility(const AdmissibilityProfile& profile, double gamma,
                                           const YGrid& grid = {});

/// Condition on sup1 and sup2 for one gamma in (0, 1).
AdmissibilityResult admissibility_check(const MultiplierSuite& suite, double gamma, const YGrid& grid = {},
                                        const QuadratureSpec& quad = {});

inline constexpr double kGammaGrid[] = {0.55, 0.65, 0.75, 0.85, 0.95};

struct GammaSearch {
    bool admissible = false;
    std::vector<AdmissibilityResult> per_gamma;
};

/// OR over the gamma grid.
GammaSearch admissible_for_some_gamma(const MultiplierSuite& suite, std::span<const double> gammas = kGammaGrid,
                                      const YGrid& grid = {}, const QuadratureSpec& quad = {});

struct ThresholdScan {
    LogFamily family;
    std::vector<double> mu;
    std::vector<double> mutilde;
    /// admissible[i][j] for (mu[i], mutilde[j]).
    std::vector<std::vector<bool>> admissible;
};

ThresholdScan threshold_scan(LogFamily family, std::span<const double> mu, std::span<const double> mutilde,
                             std::span<const double> gammas = kGammaGrid, const YGrid& grid = {},
                             const QuadratureSpec& quad = {});

/// Right-hand side of ln(1 + lambda) = int_0^inf (1 - e^(-s lambda)) e^(-s) ds / s
/// by adaptive quadrature.
double log_identity_quadrature(double lambda);

}  // namespace gsqg::multipliers
