#include "gsqg/spectral/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "gsqg/error.hpp"

namespace gsqg::spectral {

namespace {

// Plans are created once per N under a lock and executed through the
// new-array interface, which FFTW documents as thread-safe.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    std::pair<fftw_plan, fftw_plan> plans(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        const std::size_t half = static_cast<std::size_t>(n) * (n / 2 + 1);
        double* real = fftw_alloc_real(static_cast<std::size_t>(n) * n);
        fftw_complex* spec = fftw_alloc_complex(half);
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fftw_plan fwd = fftw_plan_dft_r2c_2d(n, n, real, spec, flags);
        fftw_plan bwd = fftw_plan_dft_c2r_2d(n, n, spec, real, flags);
        fftw_free(real);
        fftw_free(spec);
        if (fwd == nullptr || bwd == nullptr) throw Error(Errc::InvalidArgument, "FFTW planning failed");
        return plans_.emplace(n, std::make_pair(fwd, bwd)).first->second;
    }

    PlanCache(const PlanCache&) = delete;
    PlanCache& operator=(const PlanCache&) = delete;

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [n, p] : plans_) {
            fftw_destroy_plan(p.first);
            fftw_destroy_plan(p.second);
        }
    }

    std::mutex mutex_;
    std::map<int, std::pair<fftw_plan, fftw_plan>> plans_;
};

}  // namespace

SpectralField transform_forward(const PhysicalField& samples) {
    const GridSpec& g = samples.grid;
    g.validate();
    if (samples.values.size() != g.size()) throw Error(Errc::ShapeMismatch, "sample count does not match N*N");
    const int n = g.n;
    const int hn = n / 2 + 1;
    auto [fwd, bwd] = PlanCache::instance().plans(n);
    (void)bwd;

    // Out-of-place r2c leaves its input intact.
    std::vector<cplx> half(static_cast<std::size_t>(n) * hn);
    fftw_execute_dft_r2c(fwd, const_cast<double*>(samples.values.data()), reinterpret_cast<fftw_complex*>(half.data()));

    const double scale = 1.0 / n;
    std::vector<cplx> full(g.size());
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < hn; ++i2) {
            full[static_cast<std::size_t>(i1) * n + i2] = half[static_cast<std::size_t>(i1) * hn + i2] * scale;
        }
    }
    for (int i1 = 0; i1 < n; ++i1) {
        const int j1 = (n - i1) % n;
        for (int i2 = hn; i2 < n; ++i2) {
            full[static_cast<std::size_t>(i1) * n + i2] = std::conj(full[static_cast<std::size_t>(j1) * n + (n - i2)]);
        }
    }
    return SpectralField(g, std::move(full));
}

PhysicalField transform_backward(const SpectralField& field) {
    const GridSpec& g = field.grid();
    const int n = g.n;
    const int hn = n / 2 + 1;
    auto [fwd, bwd] = PlanCache::instance().plans(n);
    (void)fwd;

    const double scale = 1.0 / n;
    std::vector<cplx> half(static_cast<std::size_t>(n) * hn);
    const auto c = field.coeffs();
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < hn; ++i2) {
            half[static_cast<std::size_t>(i1) * hn + i2] = c[static_cast<std::size_t>(i1) * n + i2] * scale;
        }
    }
    PhysicalField out(g);
    fftw_execute_dft_c2r(bwd, reinterpret_cast<fftw_complex*>(half.data()), out.values.data());
    return out;
}

}  // namespace gsqg::spectral
