#include "gsqg/spectral/field.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg::spectral {

void GridSpec::validate() const {
    if (n < 4 || n % 2 != 0) throw Error(Errc::InvalidArgument, "grid size N must be even and >= 4");
    if (!(box > 0.0) || !std::isfinite(box)) throw Error(Errc::InvalidArgument, "box length must be positive");
    if (!(dealias > 0.0 && dealias <= 1.0)) throw Error(Errc::InvalidArgument, "dealias fraction must lie in (0,1]");
}

double GridSpec::max_wavenumber() const noexcept { return std::sqrt(2.0) * (n / 2) * k_unit(); }

PhysicalField::PhysicalField(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) throw Error(Errc::ShapeMismatch, "sample count does not match N*N");
}

SpectralField::SpectralField(const GridSpec& grid) : grid_(grid), coeffs_(grid.size(), cplx(0.0, 0.0)) {
    grid_.validate();
}

SpectralField::SpectralField(const GridSpec& grid, std::vector<cplx> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    grid_.validate();
    if (coeffs_.size() != grid_.size()) throw Error(Errc::ShapeMismatch, "coefficient count does not match N*N");
}

cplx& SpectralField::at(int k1, int k2) {
    return coeffs_[static_cast<std::size_t>(grid_.index(k1)) * grid_.n + grid_.index(k2)];
}

const cplx& SpectralField::at(int k1, int k2) const {
    return coeffs_[static_cast<std::size_t>(grid_.index(k1)) * grid_.n + grid_.index(k2)];
}

std::size_t conjugate_index(const GridSpec& grid, std::size_t flat) noexcept {
    const std::size_t n = static_cast<std::size_t>(grid.n);
    const std::size_t i1 = flat / n;
    const std::size_t i2 = flat % n;
    return ((n - i1) % n) * n + (n - i2) % n;
}

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
        worst = std::max(worst, std::abs(coeffs_[conjugate_index(grid_, f)] - std::conj(coeffs_[f])));
    }
    return worst;
}

void SpectralField::symmetrize() {
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
        const std::size_t g = conjugate_index(grid_, f);
        if (g < f) continue;
        const cplx avg = 0.5 * (coeffs_[f] + std::conj(coeffs_[g]));
        coeffs_[f] = avg;
        coeffs_[g] = std::conj(avg);
    }
}

namespace {
void require_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid()) || a.size() != b.size()) throw Error(Errc::ShapeMismatch, "fields live on different grids");
}
}  // namespace

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    require_same_grid(*this, other);
    for (std::size_t f = 0; f < coeffs_.size(); ++f) coeffs_[f] += other.coeffs_[f];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    require_same_grid(*this, other);
    for (std::size_t f = 0; f < coeffs_.size(); ++f) coeffs_[f] -= other.coeffs_[f];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

double inner(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    double acc = 0.0;
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    const double h = f.grid().dx();
    return h * h * acc;
}

double l2_norm(const SpectralField& f) { return std::sqrt(std::max(0.0, inner(f, f))); }

}  // namespace gsqg::spectral
