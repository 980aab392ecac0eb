#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsqg/multipliers/admissibility.hpp"
#include "gsqg/solver/integrator.hpp"
#include "gsqg/solver/protean.hpp"
#include "gsqg/spectral/norms.hpp"

namespace gsqg::solver {

enum class QMode { Self, Prescribed };

/// Field source evaluated at time t.
using FieldSource = std::function<SpectralField(double t)>;

struct RunConfig {
    GridSpec grid;
    MultiplierSuite suite;
    std::optional<double> dt;     ///< nullopt selects the automatic step
    double t_final = 1.0;
    Scheme scheme = Scheme::IFRK4;
    double eps_visc = 0.0;
    QMode q_mode = QMode::Self;
    FieldSource q_source;         ///< used when q_mode is Prescribed
    FieldSource forcing;          ///< optional G(t)
    double lambda_track = 0.0;    ///< Gevrey rate lambda_1
    std::vector<spectral::WeightedNormSpec> norm_specs;  ///< extra tracked norms
    int cadence = 1;              ///< record norms every cadence steps
    int snapshot_cadence = 0;     ///< keep snapshots every this many steps; 0 keeps first and last only
};

struct NormRecord {
    double t = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double sob = 0.0;     ///< ||theta||_{H^{1+beta}_omega}
    double diss = 0.0;    ///< ||m^{1/2} theta||_{H^{1+beta}_omega}
    double gevrey = 0.0;  ///< ||E^{lambda_1 t}_nu theta||_{homogeneous H^{1+beta}_omega}
    bool saturated = false;
    std::vector<double> extra;  ///< one value per RunConfig::norm_specs entry
};

struct NormSeries {
    std::vector<NormRecord> rows;
};

struct Trajectory {
    std::vector<std::pair<double, SpectralField>> snapshots;
    SpectralField final_state;
    double final_time = 0.0;
    double dt = 0.0;
    long steps = 0;
};

struct RunResult {
    Trajectory trajectory;
    NormSeries norms;
};

/// Called after every recorded step with the current time and state.
using Observer = std::function<void(double t, const SpectralField& theta)>;

/// Step size actually used: T / ceil(T / dt), where dt is the configured value or
/// min(0.5 dx / max|u(0)|, T / 100). Throws CflViolation when no finite step results
/// or the step count exceeds 1e7.
double effective_dt(const RunConfig& config, const ProteanOperator& op, const SpectralField& theta0);

/// Tracked norms of one state at time t.
class NormTracker {
public:
    explicit NormTracker(const RunConfig& config);
    [[nodiscard]] NormRecord measure(double t, const SpectralField& theta) const;

private:
    double lambda_;
    std::vector<double> sob_;
    std::vector<double> diss_;
    std::vector<double> hom_;
    std::vector<double> nu_;
    std::vector<spectral::WeightTable> extra_;
};

/// Integrates the protean system from theta0 (real, zero mean) to t_final.
/// Throws BlowupError with the last finite time when the state stops being finite.
RunResult run(const RunConfig& config, const SpectralField& theta0, const Observer& observer = {});

/// One step of the configured scheme from t to t + dt.
SpectralField step(const SpectralField& theta, double t, double dt, const RunConfig& config);

/// CSV with columns t, l2, linf, sob, diss, gevrey, saturated and one extra_<i>
/// column per extra norm. Written atomically.
void write_norm_series_csv(const std::filesystem::path& path, const NormSeries& series);
std::string norm_series_csv(const NormSeries& series);

}  // namespace gsqg::solver
