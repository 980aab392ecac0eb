#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace gsqg::spectral {

using cplx = std::complex<double>;

/// i k c without the generic complex-multiply path.
[[nodiscard]] inline cplx times_ik(double k, const cplx& c) noexcept { return {-k * c.imag(), k * c.real()}; }

/// Square periodic grid with N modes per dimension.
struct GridSpec {
    int n = 128;
    double box = 2.0 * std::numbers::pi;
    double dealias = 2.0 / 3.0;

    /// Throws InvalidArgument unless N is even and >= 4, box > 0, dealias in (0, 1].
    void validate() const;

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(n) * n; }
    [[nodiscard]] double dx() const noexcept { return box / n; }
    /// 2 pi / box, the physical wavenumber per index step.
    [[nodiscard]] double k_unit() const noexcept { return 2.0 * std::numbers::pi / box; }
    /// Signed integer wavenumber for storage index i in [0, N).
    [[nodiscard]] int wavenumber(int i) const noexcept { return i <= n / 2 ? i : i - n; }
    /// Storage index for signed integer wavenumber k in (-N/2, N/2].
    [[nodiscard]] int index(int k) const noexcept { return k >= 0 ? k : k + n; }
    /// Largest physical |k| present on the grid.
    [[nodiscard]] double max_wavenumber() const noexcept;

    friend bool operator==(const GridSpec& a, const GridSpec& b) = default;
};

/// Real samples on the N x N grid; sample (i, j) sits at x = (i dx, j dx)
/// and is stored at i * N + j.
struct PhysicalField {
    GridSpec grid;
    std::vector<double> values;

    PhysicalField() = default;
    explicit PhysicalField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}
    PhysicalField(const GridSpec& g, std::vector<double> v);

    double& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n + j]; }
    double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n + j]; }
};

/// Fourier coefficients of a real field, unitary normalization.
///
/// Coefficient (i1, i2) multiplies exp(i (k1 x1 + k2 x2)) with k = wavenumber(i) * k_unit
/// and is stored at i1 * N + i2.
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const GridSpec& grid);
    SpectralField(const GridSpec& grid, std::vector<cplx> coeffs);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::span<cplx> coeffs() noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    cplx& operator[](std::size_t flat) { return coeffs_[flat]; }
    const cplx& operator[](std::size_t flat) const { return coeffs_[flat]; }

    /// Coefficient at signed integer wavenumbers.
    [[nodiscard]] cplx& at(int k1, int k2);
    [[nodiscard]] const cplx& at(int k1, int k2) const;

    [[nodiscard]] bool zero_mean() const noexcept { return coeffs_.empty() || coeffs_[0] == cplx(0.0, 0.0); }
    /// max |c(-k) - conj(c(k))|.
    [[nodiscard]] double hermitian_defect() const;
    /// Replaces every coefficient pair with its Hermitian average.
    void symmetrize();

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(SpectralField a, double s) { return a *= s; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

private:
    GridSpec grid_;
    std::vector<cplx> coeffs_;
};

/// Flat index of the mode -k.
std::size_t conjugate_index(const GridSpec& grid, std::size_t flat) noexcept;

/// Torus inner product Re <f, g> = (L/N)^2 sum c_f conj(c_g).
double inner(const SpectralField& f, const SpectralField& g);

/// Continuous L2 norm on the torus.
double l2_norm(const SpectralField& f);

}  // namespace gsqg::spectral
