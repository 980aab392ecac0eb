#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "gsqg/error.hpp"
#include "gsqg/io/atomic_file.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/littlewood_paley.hpp"
#include "gsqg/spectral/norms.hpp"
#include "gsqg/spectral/operators.hpp"
#include "gsqg/spectral/random_field.hpp"
#include "gsqg/spectral/snapshot.hpp"

using namespace gsqg;
using namespace gsqg::spectral;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

GridSpec grid_n(int n) {
    GridSpec g;
    g.n = n;
    return g;
}

// Real single mode with unit L2 norm on the torus: cos(k . x) scaled.
SpectralField unit_mode(const GridSpec& g, int k1, int k2) {
    SpectralField f(g);
    f.at(k1, k2) = 1.0;
    f.at(-k1, -k2) = 1.0;
    f *= 1.0 / l2_norm(f);
    return f;
}

SpectralField random_smooth(const GridSpec& g, std::uint64_t seed) {
    RandomFieldSpec s;
    s.seed = seed;
    return random_field(g, s);
}

// Independent construction of the cutoff: B(t) = int_0^t e^{-1/(s(1-s))} ds / B(1)
// by composite Simpson on a fine uniform grid.
double bump_integral(double t) {
    const int n = 20000;
    auto w = [](double s) { return (s <= 0.0 || s >= 1.0) ? 0.0 : std::exp(-1.0 / (s * (1.0 - s))); };
    const double h = t / n;
    double acc = w(0.0) + w(t);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * w(i * h);
    return acc * h / 3.0;
}

double zeta_oracle(double r) {
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    return bump_integral(2.0 * (1.0 - r)) / bump_integral(1.0);
}

fs::path tmp_dir() {
    fs::path p = fs::path(GSQG_TEST_TMP) / "spectral";
    fs::create_directories(p);
    return p;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST(Grid, Validation) {
    EXPECT_THROW(grid_n(5).validate(), Error);
    EXPECT_THROW(grid_n(2).validate(), Error);
    GridSpec g;
    g.dealias = 0.0;
    EXPECT_THROW(g.validate(), Error);
    EXPECT_NO_THROW(grid_n(8).validate());
}

TEST(Fft, ConstantFieldIsDcOnly) {
    const GridSpec g = grid_n(16);
    PhysicalField p(g);
    for (auto& v : p.values) v = 3.0;
    const SpectralField f = transform_forward(p);
    EXPECT_NEAR(f[0].real(), 3.0 * g.n, 1e-12);
    for (std::size_t i = 1; i < f.size(); ++i) EXPECT_LT(std::abs(f[i]), 1e-12);
}

TEST(Fft, SineHasTwoModes) {
    const GridSpec g = grid_n(32);
    PhysicalField p(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) p(i, j) = std::sin(i * g.dx());
    const SpectralField f = transform_forward(p);
    int nonzero = 0;
    for (int k1 = -g.n / 2 + 1; k1 <= g.n / 2; ++k1) {
        for (int k2 = -g.n / 2 + 1; k2 <= g.n / 2; ++k2) {
            if (std::abs(f.at(k1, k2)) > 1e-12) {
                ++nonzero;
                EXPECT_EQ(std::abs(k1), 1);
                EXPECT_EQ(k2, 0);
            }
        }
    }
    EXPECT_EQ(nonzero, 2);
    // sin x = (e^{ix} - e^{-ix}) / 2i, so c(1,0) = N / 2i in the unitary convention.
    EXPECT_NEAR(f.at(1, 0).imag(), -0.5 * g.n, 1e-12);
}

TEST(Fft, RoundTrip) {
    const GridSpec g = grid_n(64);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    PhysicalField p(g);
    for (auto& v : p.values) v = nd(rng);
    const PhysicalField back = transform_backward(transform_forward(p));
    double err = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - p.values[i]));
    EXPECT_LE(err, 1e-13);
}

TEST(Fft, ParsevalMatchesPhysicalL2) {
    const GridSpec g = grid_n(32);
    const SpectralField f = random_smooth(g, 3);
    const PhysicalField p = transform_backward(f);
    EXPECT_NEAR(l2_norm(f), lp_norm(p, 2.0), 1e-13);
}

TEST(Multiplier, ConstantOneIsIdentity) {
    const SpectralField f = random_smooth(grid_n(32), 1);
    EXPECT_EQ(max_abs_diff(apply_multiplier(f, Symbol::constant(1.0)), f), 0.0);
}

TEST(Multiplier, PowerLawOnModeFive) {
    const GridSpec g = grid_n(32);
    const SpectralField f = unit_mode(g, 3, 4);
    const SpectralField out = apply_multiplier(f, Symbol::power_law(2.0));
    EXPECT_NEAR(out.at(3, 4).real(), 25.0 * f.at(3, 4).real(), 1e-12);
}

TEST(Multiplier, LogPowerOnModeFive) {
    const GridSpec g = grid_n(32);
    const SpectralField f = unit_mode(g, 5, 0);
    const SpectralField out = apply_multiplier(f, Symbol::log_power(1.0));
    EXPECT_NEAR(out.at(5, 0).real() / f.at(5, 0).real(), std::log(kE + 25.0), 1e-13);
}

TEST(Multiplier, ZeroModeRules) {
    const GridSpec g = grid_n(8);
    const Symbol s = Symbol::power_law(-1.0);
    EXPECT_EQ(symbol_table(g, s, ZeroModeRule::Zero)[0], 0.0);
    EXPECT_EQ(symbol_table(g, s, ZeroModeRule::Keep)[0], 1.0);
    EXPECT_THROW((void)symbol_table(g, s, ZeroModeRule::Error), Error);
}

TEST(Multiplier, DerivativeOfSine) {
    const GridSpec g = grid_n(16);
    const SpectralField f = named_field(g, "sin_x1");
    const PhysicalField d = transform_backward(derivative(f, 1));
    for (int i = 0; i < g.n; ++i) EXPECT_NEAR(d(i, 3), std::cos(i * g.dx()), 1e-13);
    EXPECT_LT(l2_norm(derivative(f, 2)), 1e-13);
}

TEST(Multiplier, PadTruncateRoundTrip) {
    const GridSpec g = grid_n(16);
    const SpectralField f = random_smooth(g, 5);
    EXPECT_LT(max_abs_diff(truncate(pad(f, 32), 16), f), 1e-13);
    // The represented function is unchanged by padding.
    EXPECT_NEAR(l2_norm(pad(f, 32)), l2_norm(f), 1e-13);
}

TEST(Multiplier, PaddedProductIsExact) {
    const GridSpec g = grid_n(16);
    const SpectralField f = named_field(g, "sin_x1");
    const SpectralField h = named_field(g, "cos_sum");
    const PhysicalField prod = transform_backward(padded_product(f, h, 32));
    const double dx = prod.grid.dx();
    for (int i = 0; i < 32; i += 5)
        for (int j = 0; j < 32; j += 3) EXPECT_NEAR(prod(i, j), std::sin(i * dx) * std::cos(i * dx + j * dx), 1e-13);
}

TEST(LittlewoodPaley, CutoffMatchesIndependentConstruction) {
    for (double r : {0.5, 0.55, 0.625, 0.7, 0.8, 0.9, 0.99, 1.0}) {
        EXPECT_NEAR(lp_cutoff(r), zeta_oracle(r), 1e-9) << r;
    }
}

TEST(LittlewoodPaley, ModeFiveTouchesTwoBlocks) {
    const GridSpec g = grid_n(64);
    const SpectralField f = unit_mode(g, 3, 4);
    const LPBlocks b = lp_partition(f, 0, default_j_max(g));
    for (const auto& [j, blk] : b.blocks) {
        const double n = l2_norm(blk);
        if (j == 2 || j == 3) {
            EXPECT_GT(n, 0.0) << j;
        } else {
            EXPECT_EQ(n, 0.0) << j;
        }
    }
    EXPECT_EQ(l2_norm(b.low), 0.0);
    EXPECT_NEAR(lp_bump(2, 5.0) + lp_bump(3, 5.0), 1.0, 1e-15);
    EXPECT_NEAR(lp_bump(2, 5.0), zeta_oracle(5.0 / 8.0), 1e-9);
}

TEST(LittlewoodPaley, ZeroField) {
    const GridSpec g = grid_n(32);
    const LPBlocks b = lp_partition(SpectralField(g), 0, default_j_max(g));
    for (const auto& [j, blk] : b.blocks) EXPECT_EQ(l2_norm(blk), 0.0);
    EXPECT_EQ(besov_norm(b, 1.0), 0.0);
}

TEST(LittlewoodPaley, RangeTooNarrow) {
    const GridSpec g = grid_n(64);
    EXPECT_THROW((void)lp_partition(SpectralField(g), 0, 3), Error);
    EXPECT_THROW((void)lp_partition(SpectralField(g), 4, 2), Error);
}

TEST(LittlewoodPalleyProperty, Reconstruction) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const GridSpec g = grid_n(64);
        RandomFieldSpec s;
        s.seed = seed;
        s.flat_spectrum = seed % 2 == 0;
        const SpectralField f = random_field(g, s);
        const int j_min = static_cast<int>(seed % 3);
        const LPBlocks b = lp_partition(f, j_min, default_j_max(g));
        EXPECT_LE(l2_norm(b.reconstruct() - f), 1e-12 * l2_norm(f));
    }
}

TEST(Norms, WeightedSingleMode) {
    const GridSpec g = grid_n(32);
    const SpectralField f = unit_mode(g, 3, 4);
    WeightedNormSpec s;
    s.sigma = 2.0;
    s.homogeneous = true;
    EXPECT_NEAR(weighted_norm(f, s).value, 25.0, 1e-12);
    s.omega = Symbol::log_power(1.0);
    EXPECT_NEAR(weighted_norm(f, s).value, 25.0 * std::log(kE + 25.0), 1e-11);
    s.homogeneous = false;
    s.omega = Symbol::identity();
    EXPECT_NEAR(weighted_norm(f, s).value, 26.0, 1e-12);
}

TEST(Norms, BesovSingleMode) {
    const GridSpec g = grid_n(64);
    const SpectralField f = unit_mode(g, 5, 0);
    const LPBlocks b = lp_partition(f, 0, default_j_max(g));
    const double v = besov_norm(b, 0.0);
    const double z = zeta_oracle(5.0 / 8.0);
    EXPECT_NEAR(v, std::sqrt(z * z + (1 - z) * (1 - z)), 1e-9);
    EXPECT_GE(v, 1.0 / std::sqrt(2.0) - 1e-12);
    EXPECT_LE(v, 1.0 + 1e-12);
}

TEST(Norms, BernsteinExamples) {
    const GridSpec g = grid_n(64);
    EXPECT_NEAR(bernstein_probe(3, unit_mode(g, 8, 0), 1.0), 1.0, 1e-13);
    EXPECT_LE(bernstein_probe(3, unit_mode(g, 15, 0), 1.0), 2.0);
    RandomFieldSpec s;
    s.seed = 11;
    s.annulus = std::make_pair(4.0, 16.0);
    const double r = bernstein_probe(3, random_field(g, s), 2.0);
    EXPECT_GT(r, 0.25);
    EXPECT_LT(r, 4.0);
}

TEST(Norms, BernsteinErrors) {
    const GridSpec g = grid_n(64);
    EXPECT_THROW((void)bernstein_probe(3, SpectralField(g), 1.0), Error);
    EXPECT_THROW((void)bernstein_probe(3, unit_mode(g, 20, 0), 1.0), Error);
}

TEST(Norms, HomogeneousNegativeOrderNeedsZeroMean) {
    const GridSpec g = grid_n(16);
    SpectralField f = unit_mode(g, 1, 0);
    f[0] = 1.0;
    WeightedNormSpec s;
    s.sigma = -1.0;
    s.homogeneous = true;
    try {
        (void)weighted_norm(f, s);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroModeUndefined);
    }
}

TEST(Norms, GevreySaturationIsFlagged) {
    const GridSpec g = grid_n(32);
    const SpectralField f = unit_mode(g, 10, 0);
    WeightedNormSpec s;
    s.gevrey = GevreySpec{1e3, Symbol::log_power(1.0)};
    const NormValue v = weighted_norm(f, s);
    EXPECT_TRUE(v.saturated);
    EXPECT_TRUE(std::isfinite(v.value));
    // Every weight is capped at e^700, so the norm is e^700 times the L2 norm.
    EXPECT_NEAR(v.value / std::exp(kGevreyCap), 1.0, 1e-12);
}

TEST(Norms, LpNorms) {
    const GridSpec g = grid_n(64);
    const PhysicalField p = transform_backward(named_field(g, "sin_sin"));
    EXPECT_NEAR(linf_norm(p), 1.0, 2e-3);
    // int sin^2 sin^2 = pi^2 on [0, 2 pi]^2
    EXPECT_NEAR(lp_norm(p, 2.0), kPi, 1e-12);
    EXPECT_THROW((void)lp_norm(p, 0.5), Error);
}

TEST(NormsProperty, InterpolationInequality) {
    // ||w^g f|| <= ||w^g1 f||^(1-t) ||w^g2 f||^t with g = (1-t) g1 + t g2.
    const GridSpec g = grid_n(64);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SpectralField f = random_smooth(g, seed);
        for (double t : {0.25, 0.5, 0.8}) {
            const double g1 = 0.0, g2 = 2.0, gm = (1 - t) * g1 + t * g2;
            auto n = [&](double e) {
                WeightedNormSpec s;
                s.omega = Symbol::log_power(e);
                return weighted_norm(f, s).value;
            };
            EXPECT_LE(n(gm), std::pow(n(g1), 1 - t) * std::pow(n(g2), t) * (1 + 1e-12));
        }
    }
}

TEST(NormsProperty, GevreyMonotoneInLambda) {
    const GridSpec g = grid_n(32);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SpectralField f = random_smooth(g, seed);
        double prev = 0.0;
        for (double lam : {0.0, 0.01, 0.1, 0.5, 1.0, 3.0}) {
            WeightedNormSpec s;
            s.sigma = 1.0;
            s.gevrey = GevreySpec{lam, Symbol::log_power(1.0)};
            const double v = weighted_norm(f, s).value;
            EXPECT_GE(v, prev);
            prev = v;
        }
    }
}

TEST(NormsProperty, NormEquivalenceUniform) {
    // ||f||_{H^s_w} against ||f||_{Hdot^s_w} + ||f||_{L^2_w} over 100 random fields.
    const GridSpec g = grid_n(32);
    double lo = 1e300, hi = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomFieldSpec rs;
        rs.seed = seed;
        rs.spectral_decay = 1.0 + (seed % 4);
        const SpectralField f = random_field(g, rs);
        WeightedNormSpec full, hom, l2;
        full.sigma = hom.sigma = 1.5;
        full.omega = hom.omega = l2.omega = Symbol::log_power(1.0);
        hom.homogeneous = true;
        const double r = weighted_norm(f, full).value / (weighted_norm(f, hom).value + weighted_norm(f, l2).value);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    // (1 + r^2)^(s/2) lies between (r^s + 1) / 2 and r^s + 1 up to 2^(s/2).
    EXPECT_GE(lo, 0.5);
    EXPECT_LE(hi, 1.0 + 1e-12);
}

TEST(SpectralProperty, HermitianSymmetryPreserved) {
    const GridSpec g = grid_n(32);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SpectralField f = random_smooth(g, seed);
        EXPECT_EQ(f.hermitian_defect(), 0.0);
        EXPECT_LE(apply_multiplier(f, Symbol::log_power(1.5)).hermitian_defect(), 1e-15);
        const LPBlocks b = lp_partition(f, 0, default_j_max(g));
        for (const auto& [j, blk] : b.blocks) EXPECT_LE(blk.hermitian_defect(), 1e-15);
        EXPECT_LE(derivative(f, 1).hermitian_defect(), 1e-15);
    }
}

TEST(RandomField, DeterministicAndZeroMean) {
    const GridSpec g = grid_n(32);
    const SpectralField a = random_smooth(g, 42);
    const SpectralField b = random_smooth(g, 42);
    EXPECT_EQ(max_abs_diff(a, b), 0.0);
    EXPECT_TRUE(a.zero_mean());
    EXPECT_NEAR(l2_norm(a), 1.0, 1e-14);
    EXPECT_GT(max_abs_diff(a, random_smooth(g, 43)), 0.0);
}

TEST(RandomField, RespectsAnnulusAndCut) {
    const GridSpec g = grid_n(64);
    RandomFieldSpec s;
    s.annulus = std::make_pair(4.0, 16.0);
    const SpectralField f = random_field(g, s);
    const auto radius = radius_table(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != cplx(0.0, 0.0)) {
            EXPECT_GT(radius[i], 4.0);
            EXPECT_LT(radius[i], 16.0);
        }
    }
    EXPECT_TRUE(within_mask(random_smooth(g, 1), dealias_mask(g)));
}

TEST(RandomField, UnknownName) { EXPECT_THROW((void)named_field(grid_n(8), "nope"), Error); }

TEST(Snapshot, RoundTrip) {
    const GridSpec g = grid_n(16);
    const PhysicalField p = transform_backward(random_smooth(g, 2));
    const fs::path path = tmp_dir() / "round.gsqg";
    write_snapshot(path, p);
    const PhysicalField q = read_snapshot(path);
    EXPECT_EQ(q.grid.n, 16);
    EXPECT_EQ(q.grid.box, g.box);
    EXPECT_EQ(q.values, p.values);
    EXPECT_EQ(fs::file_size(path), 4u + 4 + 4 + 8 + 8 * 256);
}

TEST(Snapshot, HeaderLayout) {
    const GridSpec g = grid_n(4);
    PhysicalField p(g);
    p.values[0] = 1.5;
    const fs::path path = tmp_dir() / "layout.gsqg";
    write_snapshot(path, p);
    std::ifstream in(path, std::ios::binary);
    unsigned char h[28];
    in.read(reinterpret_cast<char*>(h), 28);
    EXPECT_EQ(std::string(reinterpret_cast<char*>(h), 4), "GSQG");
    EXPECT_EQ(h[4], 1);
    EXPECT_EQ(h[8], 4);
    EXPECT_EQ(h[9] | h[10] | h[11], 0);
    // 1.5 = 0x3FF8000000000000, little-endian
    EXPECT_EQ(h[27], 0x3F);
    EXPECT_EQ(h[26], 0xF8);
}

TEST(Snapshot, Errors) {
    const fs::path dir = tmp_dir();
    EXPECT_THROW((void)read_snapshot(dir / "missing.gsqg"), Error);
    io::write_file_atomic(dir / "bad_magic.gsqg", "XXXX0000");
    EXPECT_THROW((void)read_snapshot(dir / "bad_magic.gsqg"), Error);
    const PhysicalField p(grid_n(8));
    write_snapshot(dir / "ok.gsqg", p);
    std::string bytes;
    {
        std::ifstream in(dir / "ok.gsqg", std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    io::write_file_atomic(dir / "short.gsqg", bytes.substr(0, bytes.size() - 3));
    try {
        (void)read_snapshot(dir / "short.gsqg");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IoError);
    }
}

TEST(AtomicFile, ReplacesContentAndLeavesNoTemporaries) {
    const fs::path dir = tmp_dir() / "atomic";
    fs::remove_all(dir);
    fs::create_directories(dir);
    io::write_file_atomic(dir / "a.txt", "first");
    io::write_file_atomic(dir / "a.txt", "second");
    std::ifstream in(dir / "a.txt");
    std::string s;
    in >> s;
    EXPECT_EQ(s, "second");
    int count = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++count;
    EXPECT_EQ(count, 1);
    EXPECT_THROW(io::write_file_atomic(dir / "no" / "such" / "dir" / "x", "y"), Error);
}
