#include "gsqg/spectral/random_field.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gsqg/error.hpp"
#include "gsqg/spectral/fft.hpp"

namespace gsqg::spectral {

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec) {
    grid.validate();
    if (!(spec.amplitude >= 0.0)) throw Error(Errc::InvalidArgument, "amplitude must be non-negative");
    const int n = grid.n;
    const double cut = spec.k_max > 0.0 ? spec.k_max : grid.dealias * (n / 2);
    const double unit = grid.k_unit();
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    SpectralField f(grid);
    for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = grid.wavenumber(i1);
        for (int i2 = 0; i2 < n; ++i2) {
            const int k2 = grid.wavenumber(i2);
            // Draw each conjugate pair once; the -k partner is filled by symmetrize.
            if (k1 == n / 2 || k2 == n / 2) continue;
            const double re = normal(rng);
            const double im = normal(rng);
            const double r_int = std::hypot(double(k1), double(k2));
            if (r_int == 0.0 || std::max(std::abs(k1), std::abs(k2)) > cut) continue;
            const double r = r_int * unit;
            if (spec.annulus && !(r > spec.annulus->first && r < spec.annulus->second)) continue;
            const double sd = spec.flat_spectrum ? 1.0 : std::pow(1.0 + r, -spec.spectral_decay);
            f[static_cast<std::size_t>(i1) * n + i2] = sd * cplx(re, im);
        }
    }
    f.symmetrize();
    const double norm = l2_norm(f);
    if (norm == 0.0) {
        if (spec.amplitude == 0.0) return f;
        throw Error(Errc::EmptyBlock, "random field has no admissible modes");
    }
    f *= spec.amplitude / norm;
    return f;
}

SpectralField named_field(const GridSpec& grid, const std::string& name) {
    grid.validate();
    const int n = grid.n;
    const double h = grid.dx();
    PhysicalField p(grid);
    if (name == "zero") return SpectralField(grid);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x1 = i * h;
            const double x2 = j * h;
            double v = 0.0;
            if (name == "sin_sin") {
                v = std::sin(x1) * std::sin(x2);
            } else if (name == "sin_x1") {
                v = std::sin(x1);
            } else if (name == "cos_sum") {
                v = std::cos(x1 + x2);
            } else if (name == "vortex") {
                const double c = 0.5 * grid.box;
                const double d1 = x1 - c;
                const double d2 = x2 - c;
                v = std::exp(-4.0 * (d1 * d1 + d2 * d2));
            } else {
                throw Error(Errc::InvalidArgument, "unknown field name '" + name + "'");
            }
            p(i, j) = v;
        }
    }
    SpectralField f = transform_forward(p);
    f[0] = cplx(0.0, 0.0);
    return f;
}

}  // namespace gsqg::spectral
