#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsqg/multipliers/symbol.hpp"

namespace gsqg::multipliers {

enum class MultiplierClass { W, C, D, S };

enum class Property { O1, O2, O3, S1, S2, DominatedByM, McDivergence };

std::string_view to_string(MultiplierClass cls) noexcept;
std::string_view to_string(Property property) noexcept;

/// Log-spaced radial sample grid with an optional sample at r = 0.
struct RGrid {
    double r_min = 1e-6;
    double r_max = 1e12;
    int points_per_decade = 20;
    bool include_zero = true;

    [[nodiscard]] std::vector<double> points() const;
};

struct PropertyVerdict {
    Property property = Property::O1;
    bool pass = false;
    double constant = 0.0;  ///< empirical constant (sup of the tested ratio)
    double worst_r = 0.0;   ///< where the constant was attained
    std::string note;
};

struct ClassReport {
    MultiplierClass cls;
    std::string symbol;
    RGrid grid;
    double tol = 0.0;
    std::vector<PropertyVerdict> verdicts;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const PropertyVerdict* find(Property property) const;
};

/// Tests class membership on a sampled grid.
///
/// W: O1-O3 on each factor of the quotient decomposition. C: MC-divergence,
/// plus O1-O2 on the factors. D: O1-O3 for 1 + sym. S: S1, S2 and, when m is
/// supplied, sym <= C (1 + m). Bounded suprema are judged by comparing the sup
/// over the top two decades of the grid with the two decades below; a ratio
/// above 1 + tol counts as growth.
ClassReport verify_class(const Symbol& sym, MultiplierClass cls, const RGrid& grid = {},
                         double tol = 0.05, const std::optional<Symbol>& m = std::nullopt);

/// Outcome of the MC-divergence test for p: whether the integral of p^2/r over
/// [1, inf) diverges.
struct DivergenceVerdict {
    bool divergent = false;
    bool symbolic = false;            ///< decided in closed form for a built-in family
    std::vector<double> cutoffs;      ///< Y values used by the quadrature route
    std::vector<double> integrals;    ///< integral of p^2/r over [1, Y]
    double growth_ratio = 0.0;        ///< last increment ratio / harmonic reference
};

DivergenceVerdict mc_divergence(const Symbol& p, double tol = 0.05);

/// Quadrature route of mc_divergence, usable on any tree.
DivergenceVerdict mc_divergence_by_quadrature(const Symbol& p, double tol = 0.05);

}  // namespace gsqg::multipliers
