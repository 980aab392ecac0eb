#include "gsqg/spectral/operators.hpp"

#include <cmath>
#include <limits>

#include "gsqg/error.hpp"
#include "gsqg/spectral/fft.hpp"

namespace gsqg::spectral {

std::vector<double> radial_table(const GridSpec& grid, const std::function<double(double)>& fn) {
    grid.validate();
    const int n = grid.n;
    const std::size_t max_s = static_cast<std::size_t>(n / 2) * (n / 2) * 2;
    std::vector<double> by_s(max_s + 1, std::numeric_limits<double>::quiet_NaN());
    std::vector<char> done(max_s + 1, 0);
    std::vector<double> out(grid.size());
    const double unit = grid.k_unit();
    for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = grid.wavenumber(i1);
        for (int i2 = 0; i2 < n; ++i2) {
            const int k2 = grid.wavenumber(i2);
            const std::size_t s = static_cast<std::size_t>(k1 * k1 + k2 * k2);
            if (!done[s]) {
                by_s[s] = fn(std::sqrt(static_cast<double>(s)) * unit);
                done[s] = 1;
            }
            out[static_cast<std::size_t>(i1) * n + i2] = by_s[s];
        }
    }
    return out;
}

std::vector<double> radius_table(const GridSpec& grid) {
    return radial_table(grid, [](double r) { return r; });
}

std::vector<double> symbol_table(const GridSpec& grid, const Symbol& sym, ZeroModeRule rule) {
    double origin = 0.0;
    if (sym.singular_at_origin()) {
        switch (rule) {
            case ZeroModeRule::Zero: origin = 0.0; break;
            case ZeroModeRule::Keep: origin = 1.0; break;
            case ZeroModeRule::Error:
                throw Error(Errc::SingularAtOrigin, sym.to_string() + " is undefined at k = 0");
        }
    } else {
        origin = multipliers::eval_symbol(sym, 0.0);
    }
    return radial_table(grid, [&](double r) { return r == 0.0 ? origin : multipliers::eval_symbol(sym, r); });
}

SpectralField apply_table(const SpectralField& f, const std::vector<double>& table) {
    if (table.size() != f.size()) throw Error(Errc::ShapeMismatch, "multiplier table does not match the grid");
    SpectralField out(f);
    auto c = out.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= table[i];
    return out;
}

SpectralField apply_multiplier(const SpectralField& f, const Symbol& sym, ZeroModeRule rule) {
    return apply_table(f, symbol_table(f.grid(), sym, rule));
}

SpectralField derivative(const SpectralField& f, int ell) {
    if (ell != 1 && ell != 2) throw Error(Errc::InvalidArgument, "derivative axis must be 1 or 2");
    const GridSpec& g = f.grid();
    const int n = g.n;
    const double unit = g.k_unit();
    SpectralField out(g);
    auto o = out.coeffs();
    const auto c = f.coeffs();
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            const int i = ell == 1 ? i1 : i2;
            if (i == n / 2) continue;
            const double k = g.wavenumber(i) * unit;
            const std::size_t flat = static_cast<std::size_t>(i1) * n + i2;
            o[flat] = times_ik(k, c[flat]);
        }
    }
    return out;
}

std::vector<double> dealias_mask(const GridSpec& grid) {
    grid.validate();
    const int n = grid.n;
    const double cut = grid.dealias * (n / 2);
    std::vector<double> mask(grid.size(), 0.0);
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            const int k1 = std::abs(grid.wavenumber(i1));
            const int k2 = std::abs(grid.wavenumber(i2));
            if (k1 < n / 2 && k2 < n / 2 && std::max(k1, k2) <= cut) {
                mask[static_cast<std::size_t>(i1) * n + i2] = 1.0;
            }
        }
    }
    return mask;
}

bool within_mask(const SpectralField& f, const std::vector<double>& mask) {
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (mask[i] == 0.0 && c[i] != cplx(0.0, 0.0)) return false;
    }
    return true;
}

SpectralField pad(const SpectralField& f, int m) {
    const GridSpec& g = f.grid();
    if (m < g.n || m % 2 != 0) throw Error(Errc::ShapeMismatch, "padding target must be even and >= N");
    GridSpec big = g;
    big.n = m;
    SpectralField out(big);
    const int n = g.n;
    // Unitary coefficients scale with the grid size.
    const double scale = static_cast<double>(m) / n;
    for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = g.wavenumber(i1);
        if (k1 == n / 2) continue;
        for (int i2 = 0; i2 < n; ++i2) {
            const int k2 = g.wavenumber(i2);
            if (k2 == n / 2) continue;
            out.at(k1, k2) = scale * f[static_cast<std::size_t>(i1) * n + i2];
        }
    }
    return out;
}

SpectralField truncate(const SpectralField& f, int n) {
    const GridSpec& g = f.grid();
    if (n > g.n || n % 2 != 0 || n < 4) throw Error(Errc::ShapeMismatch, "truncation target must be even and <= N");
    GridSpec small = g;
    small.n = n;
    SpectralField out(small);
    const double scale = static_cast<double>(n) / g.n;
    for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = small.wavenumber(i1);
        if (k1 == n / 2) continue;
        for (int i2 = 0; i2 < n; ++i2) {
            const int k2 = small.wavenumber(i2);
            if (k2 == n / 2) continue;
            out[static_cast<std::size_t>(i1) * n + i2] = scale * f.at(k1, k2);
        }
    }
    return out;
}

SpectralField padded_product(const SpectralField& f, const SpectralField& g, int m) {
    if (!(f.grid() == g.grid())) throw Error(Errc::ShapeMismatch, "product of fields on different grids");
    PhysicalField a = transform_backward(pad(f, m));
    const PhysicalField b = transform_backward(pad(g, m));
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] *= b.values[i];
    return transform_forward(a);
}

}  // namespace gsqg::spectral
