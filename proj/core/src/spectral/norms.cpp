#include "gsqg/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/error.hpp"
#include "gsqg/spectral/operators.hpp"

namespace gsqg::spectral {

WeightTable weight_table(const GridSpec& grid, const WeightedNormSpec& spec) {
    WeightTable out;
    const bool singular_omega = spec.omega.singular_at_origin();
    const bool singular_nu = spec.gevrey && spec.gevrey->nu.singular_at_origin();
    out.weight = radial_table(grid, [&](double r) {
        if (r == 0.0) {
            if (spec.homogeneous) return 0.0;
            if (singular_omega || singular_nu) return std::numeric_limits<double>::quiet_NaN();
        }
        const double base = spec.homogeneous ? std::pow(r, spec.sigma) : std::pow(1.0 + r * r, 0.5 * spec.sigma);
        double w = base * multipliers::eval_symbol(spec.omega, r);
        if (spec.gevrey) {
            double expo = spec.gevrey->lambda * multipliers::eval_symbol(spec.gevrey->nu, r);
            if (expo > kGevreyCap) {
                expo = kGevreyCap;
                out.saturated = true;
            }
            w *= std::exp(expo);
        }
        return w;
    });
    return out;
}

double weighted_norm(const SpectralField& f, const WeightTable& table) {
    if (table.weight.size() != f.size()) throw Error(Errc::ShapeMismatch, "weight table does not match the grid");
    const auto c = f.coeffs();
    double acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == cplx(0.0, 0.0)) continue;
        const double w = table.weight[i];
        if (std::isnan(w)) throw Error(Errc::SingularAtOrigin, "weight undefined at k = 0 for a field with nonzero mean");
        acc += w * w * std::norm(c[i]);
    }
    const double h = f.grid().dx();
    if (std::isfinite(acc)) return h * std::sqrt(acc);
    // Capped Gevrey weights reach e^700, whose square overflows; redo with rescaling.
    double peak = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != cplx(0.0, 0.0)) peak = std::max(peak, table.weight[i] * std::abs(c[i]));
    }
    if (!std::isfinite(peak)) return peak;
    acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == cplx(0.0, 0.0)) continue;
        const double v = table.weight[i] * std::abs(c[i]) / peak;
        acc += v * v;
    }
    return h * peak * std::sqrt(acc);
}

NormValue weighted_norm(const SpectralField& f, const WeightedNormSpec& spec) {
    if (spec.homogeneous && spec.sigma < 0.0 && !f.zero_mean()) {
        throw Error(Errc::ZeroModeUndefined, "homogeneous negative-order norm of a field with nonzero mean");
    }
    const WeightTable table = weight_table(f.grid(), spec);
    // Saturation only matters on modes that carry energy.
    NormValue out{weighted_norm(f, table), false};
    if (table.saturated && spec.gevrey) {
        const auto c = f.coeffs();
        const std::vector<double> radius = radius_table(f.grid());
        for (std::size_t i = 0; i < c.size() && !out.saturated; ++i) {
            if (c[i] == cplx(0.0, 0.0) || radius[i] == 0.0) continue;
            if (spec.gevrey->lambda * multipliers::eval_symbol(spec.gevrey->nu, radius[i]) > kGevreyCap) {
                out.saturated = true;
            }
        }
    }
    return out;
}

double lp_norm(const PhysicalField& f, double p) {
    if (!(p >= 1.0)) throw Error(Errc::InvalidArgument, "L^p norm needs p >= 1");
    if (std::isinf(p)) return linf_norm(f);
    double acc = 0.0;
    for (double v : f.values) acc += std::pow(std::abs(v), p);
    const double h = f.grid.dx();
    return std::pow(h * h * acc, 1.0 / p);
}

double linf_norm(const PhysicalField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double besov_norm(const LPBlocks& blocks, double sigma, const Symbol& omega) {
    const std::vector<double> table = symbol_table(blocks.low.grid(), omega, ZeroModeRule::Zero);
    double acc = 0.0;
    const double low = l2_norm(apply_table(blocks.low, table));
    acc += std::pow(2.0, 2.0 * sigma * (blocks.j_min - 1)) * low * low;
    for (const auto& [j, f] : blocks.blocks) {
        const double b = l2_norm(apply_table(f, table));
        acc += std::pow(2.0, 2.0 * sigma * j) * b * b;
    }
    return std::sqrt(acc);
}

double bernstein_probe(int j, const SpectralField& block, double sigma) {
    const double base = l2_norm(block);
    if (base == 0.0) throw Error(Errc::EmptyBlock, "block " + std::to_string(j) + " is empty");
    const std::vector<double> radius = radius_table(block.grid());
    const double lo = std::ldexp(1.0, j - 1);
    const double hi = std::ldexp(1.0, j + 1);
    const auto c = block.coeffs();
    double outside = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (radius[i] <= lo || radius[i] >= hi) outside += std::norm(c[i]);
    }
    const double h = block.grid().dx();
    if (h * std::sqrt(outside) > 1e-12 * base) {
        throw Error(Errc::LocalizationViolated, "block has content outside the dyadic annulus");
    }
    WeightedNormSpec spec;
    spec.sigma = sigma;
    spec.homogeneous = true;
    return weighted_norm(block, spec).value / (std::pow(2.0, sigma * j) * base);
}

}  // namespace gsqg::spectral
