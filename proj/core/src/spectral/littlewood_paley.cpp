#include "gsqg/spectral/littlewood_paley.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/spectral/operators.hpp"

namespace gsqg::spectral {

namespace {

constexpr int kGaussOrder = 8;
constexpr int kPanels = 1024;

struct GaussRule {
    std::array<double, kGaussOrder> x{};
    std::array<double, kGaussOrder> w{};
};

// Legendre nodes on [-1, 1] by Newton iteration on P_n.
GaussRule make_gauss_rule() {
    GaussRule rule;
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.x[i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double bump_integrand(double s) { return std::exp(-1.0 / (s * (1.0 - s))); }

double gauss_integral(const GaussRule& rule, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < kGaussOrder; ++i) acc += rule.w[i] * bump_integrand(mid + half * rule.x[i]);
    return acc * half;
}

// Cumulative integral of exp(-1/(s(1-s))) at panel boundaries, normalized to 1 at s = 1.
struct BumpTable {
    GaussRule rule;
    std::array<double, kPanels + 1> cumulative{};
    double total = 0.0;

    BumpTable() : rule(make_gauss_rule()) {
        cumulative[0] = 0.0;
        for (int i = 0; i < kPanels; ++i) {
            cumulative[i + 1] = cumulative[i] + gauss_integral(rule, double(i) / kPanels, double(i + 1) / kPanels);
        }
        total = cumulative[kPanels];
    }

    double operator()(double t) const {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        const int i = std::min(kPanels - 1, static_cast<int>(t * kPanels));
        const double a = double(i) / kPanels;
        return (cumulative[i] + gauss_integral(rule, a, t)) / total;
    }
};

const BumpTable& bump_table() {
    static const BumpTable table;
    return table;
}

}  // namespace

double lp_cutoff(double r) {
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    return bump_table()(2.0 * (1.0 - r));
}

double lp_bump(double r) { return lp_cutoff(0.5 * r) - lp_cutoff(r); }

double lp_bump(int j, double r) { return lp_bump(std::ldexp(r, -j)); }

const SpectralField& LPBlocks::block(int j) const {
    for (const auto& [jj, f] : blocks) {
        if (jj == j) return f;
    }
    throw Error(Errc::InvalidArgument, "no block with index " + std::to_string(j));
}

SpectralField LPBlocks::reconstruct() const {
    SpectralField out(low);
    for (const auto& [j, f] : blocks) out += f;
    return out;
}

int default_j_max(const GridSpec& grid) {
    return static_cast<int>(std::ceil(std::log2(grid.max_wavenumber()) - 1e-12));
}

LPBlocks lp_partition(const SpectralField& f, int j_min, int j_max) {
    const GridSpec& g = f.grid();
    if (j_min > j_max) throw Error(Errc::RangeTooNarrow, "j_min exceeds j_max");
    if (std::ldexp(1.0, j_max) < g.max_wavenumber()) {
        throw Error(Errc::RangeTooNarrow, "2^j_max does not cover the largest grid wavenumber");
    }
    LPBlocks out;
    out.j_min = j_min;
    out.j_max = j_max;
    out.low = apply_table(f, radial_table(g, [j_min](double r) { return lp_cutoff(std::ldexp(r, -j_min)); }));
    for (int j = j_min; j <= j_max; ++j) {
        out.blocks.emplace_back(j, lp_block(f, j));
    }
    return out;
}

SpectralField lp_block(const SpectralField& f, int j) {
    // zeta(2^-(j+1) r) - zeta(2^-j r) keeps the telescoping sum exact.
    return apply_table(f, radial_table(f.grid(), [j](double r) {
                           return lp_cutoff(std::ldexp(r, -(j + 1))) - lp_cutoff(std::ldexp(r, -j));
                       }));
}

SpectralField lp_low(const SpectralField& f, int j) {
    return apply_table(f, radial_table(f.grid(), [j](double r) { return lp_cutoff(std::ldexp(r, -j)); }));
}

}  // namespace gsqg::spectral
