#include "gsqg/harness/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gsqg/error.hpp"
#include "gsqg/harness/csv.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/littlewood_paley.hpp"
#include "gsqg/spectral/norms.hpp"
#include "gsqg/spectral/operators.hpp"
#include "gsqg/spectral/random_field.hpp"

namespace gsqg::harness {

using multipliers::Symbol;
using spectral::cplx;
using spectral::PhysicalField;
using spectral::WeightedNormSpec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int j, int trial, int role) {
    std::uint64_t x = splitmix(seed);
    x = splitmix(x ^ static_cast<std::uint64_t>(j + 64));
    x = splitmix(x ^ static_cast<std::uint64_t>(trial));
    return splitmix(x ^ static_cast<std::uint64_t>(role));
}

// Product on the grid of a and b, exact when their combined support fits.
SpectralField mul(const SpectralField& a, const SpectralField& b) {
    PhysicalField pa = spectral::transform_backward(a);
    const PhysicalField pb = spectral::transform_backward(b);
    for (std::size_t i = 0; i < pa.values.size(); ++i) pa.values[i] *= pb.values[i];
    return spectral::transform_forward(pa);
}

double norm_of(const SpectralField& f, double sigma, const Symbol& omega, bool homogeneous) {
    WeightedNormSpec spec;
    spec.sigma = sigma;
    spec.omega = omega;
    spec.homogeneous = homogeneous;
    return spectral::weighted_norm(f, spec).value;
}

// pi^{a,b}(x, y): the first factor turns inhomogeneous at a = 1.
double pi_term(const SpectralField& x, double a, const SpectralField& y, double b) {
    return norm_of(x, a, Symbol::identity(), a < 1.0) * norm_of(y, b, Symbol::identity(), true);
}

double rho_term(const SpectralField& x, double a, const SpectralField& y, double b) {
    return norm_of(x, a, Symbol::identity(), true) * norm_of(y, b, Symbol::identity(), true);
}

double safe_ratio(double lhs, double rhs) {
    if (rhs > 0.0) return lhs / rhs;
    return lhs == 0.0 ? 0.0 : kInf;
}

void check_annulus(const SpectralField& f, int j, const char* what) {
    const GridSpec& g = f.grid();
    const double lo = std::ldexp(1.0, j - 1);
    const double hi = std::ldexp(1.0, j + 1);
    const std::vector<double> radius = spectral::radius_table(g);
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != cplx(0.0, 0.0) && !(radius[i] > lo && radius[i] < hi)) {
            throw Error(Errc::LocalizationViolated, std::string(what) + " is not supported in the annulus of shell " +
                                                        std::to_string(j));
        }
    }
}

void validate(const CommutatorProbeSpec& spec) {
    spec.grid.validate();
    if (spec.ell != 1 && spec.ell != 2) throw Error(Errc::InvalidArgument, "derivative axis must be 1 or 2");
    if (spec.variant == CommutatorVariant::Gevrey) {
        if (!(spec.s_first <= 1.0 && spec.s_second <= 1.0 && spec.s_first + spec.s_second > 0.0)) {
            throw Error(Errc::InvalidArgument, "Gevrey commutator needs s, sbar <= 1 and s + sbar > 0");
        }
        if (!(spec.lambda >= 0.0)) throw Error(Errc::InvalidArgument, "lambda must be >= 0");
    } else {
        const bool eps_ok = spec.variant == CommutatorVariant::Localized ? spec.eps >= 0.0 : spec.eps > 0.0;
        if (!(spec.s >= 0.0 && spec.s < 1.0 && eps_ok && spec.eps <= 1.0 && spec.s + spec.eps <= 1.0)) {
            throw Error(Errc::InvalidArgument, "commutator needs s in [0, 1), eps in (0, 1] and s + eps <= 1");
        }
    }
}

// Radial factor of the operator symbol; the full symbol is radial(|xi|) i xi_l.
std::function<double(double)> radial_factor(const CommutatorProbeSpec& spec, int j) {
    if (spec.variant == CommutatorVariant::Gevrey) {
        const Symbol omega = spec.suite.omega();
        const Symbol nu = spec.suite.nu;
        const double r_exp = spec.r;
        const double lambda = spec.lambda;
        return [=](double r) {
            if (r == 0.0) return 0.0;
            const double bump = spectral::lp_bump(j, r);
            if (bump == 0.0) return 0.0;
            return multipliers::eval_symbol(omega, r) * std::pow(r, r_exp) *
                   std::exp(lambda * multipliers::eval_symbol(nu, r)) * bump;
        };
    }
    const Symbol p = spec.suite.p();
    const double s = spec.s;
    return [=](double r) { return r == 0.0 ? 0.0 : std::pow(r, -s) * multipliers::eval_symbol(p, r); };
}

}  // namespace

// ---------------------------------------------------------------------------

double commutator_pairing(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                          const CommutatorProbeSpec& spec, int j) {
    if (!(f.grid() == g.grid()) || !(f.grid() == h.grid())) {
        throw Error(Errc::ShapeMismatch, "commutator fields on different grids");
    }
    if (spec.variant != CommutatorVariant::NonLocalized) check_annulus(h, j, "h");
    if (spec.variant == CommutatorVariant::Localized) check_annulus(f, j, "f");
    const int m = 2 * f.grid().n;
    const SpectralField fp = spectral::pad(f, m);
    const SpectralField gp = spectral::pad(g, m);
    const SpectralField hp = spectral::pad(h, m);
    const std::vector<double> table = spectral::radial_table(fp.grid(), radial_factor(spec, j));
    auto apply = [&](const SpectralField& x) { return spectral::derivative(spectral::apply_table(x, table), spec.ell); };
    const SpectralField x = apply(mul(gp, fp)) - mul(gp, apply(fp));
    return spectral::inner(x, hp);
}

SpectralField commutator_projection(const SpectralField& f, const SpectralField& g, const CommutatorProbeSpec& spec,
                                    int j) {
    if (!(f.grid() == g.grid())) throw Error(Errc::ShapeMismatch, "commutator fields on different grids");
    const int n = f.grid().n;
    const SpectralField fp = spectral::pad(f, 2 * n);
    const SpectralField gp = spectral::pad(g, 2 * n);
    const GridSpec& big = fp.grid();
    const std::vector<double> table = spectral::radial_table(big, radial_factor(spec, j));
    auto apply = [&](const SpectralField& x) { return spectral::derivative(spectral::apply_table(x, table), spec.ell); };
    const double lo = std::ldexp(1.0, j - 1);
    const double hi = std::ldexp(1.0, j + 1);
    const std::vector<double> band = spectral::radial_table(big, [&](double r) { return r > lo && r < hi ? 1.0 : 0.0; });
    return spectral::truncate(spectral::apply_table(apply(mul(gp, fp)) - mul(gp, apply(fp)), band), n);
}

double commutator_pairing_triads(const SpectralField& f, const SpectralField& g, const SpectralField& h,
                                 const CommutatorProbeSpec& spec, int j) {
    if (!(f.grid() == g.grid()) || !(f.grid() == h.grid())) {
        throw Error(Errc::ShapeMismatch, "commutator fields on different grids");
    }
    const GridSpec& grid = f.grid();
    const int n = grid.n;
    const double unit = grid.k_unit();
    const auto radial = radial_factor(spec, j);
    auto alpha = [&](int k1, int k2) {
        const double r = std::hypot(double(k1), double(k2)) * unit;
        const double kl = (spec.ell == 1 ? k1 : k2) * unit;
        return cplx(0.0, kl * radial(r));
    };
    struct Mode {
        int k1, k2;
        cplx c;
    };
    auto support = [&](const SpectralField& x) {
        std::vector<Mode> out;
        for (int i1 = 0; i1 < n; ++i1) {
            for (int i2 = 0; i2 < n; ++i2) {
                const cplx c = x[static_cast<std::size_t>(i1) * n + i2];
                if (c != cplx(0.0, 0.0)) out.push_back({grid.wavenumber(i1), grid.wavenumber(i2), c});
            }
        }
        return out;
    };
    const std::vector<Mode> fs = support(f);
    const std::vector<Mode> gs = support(g);
    cplx acc(0.0, 0.0);
    for (const Mode& a : fs) {
        const cplx alpha_a = alpha(a.k1, a.k2);
        for (const Mode& b : gs) {
            const int x1 = a.k1 + b.k1;
            const int x2 = a.k2 + b.k2;
            if (std::abs(x1) >= n / 2 || std::abs(x2) >= n / 2) continue;
            const cplx hc = h.at(x1, x2);
            if (hc == cplx(0.0, 0.0)) continue;
            acc += (alpha(x1, x2) - alpha_a) * b.c * a.c * std::conj(hc);
        }
    }
    const double dx = grid.dx();
    return dx * dx / n * acc.real();
}

std::vector<ProbeSample> probe_commutator(const CommutatorProbeSpec& spec) {
    validate(spec);
    const GridSpec& grid = spec.grid;
    const double unit = grid.k_unit();
    if (spec.j_min > spec.j_max || spec.trials < 1) throw Error(Errc::RangeTooNarrow, "empty probe range");
    if (std::ldexp(1.0, spec.j_max - 1) >= grid.n / 2 * unit) {
        throw Error(Errc::RangeTooNarrow, "shell j_max lies beyond the grid");
    }
    const auto& suite = spec.suite;
    const Symbol omega = suite.omega();
    const Symbol m1 = suite.m1();
    std::vector<ProbeSample> out;
    for (int j = spec.j_min; j <= spec.j_max; ++j) {
        const double y = std::ldexp(1.0, j);
        const double gamma_y = std::pow(multipliers::eval_symbol(m1, y), 0.5 * suite.gamma);
        for (int t = 0; t < spec.trials; ++t) {
            ProbeSample sample;
            sample.j = j;
            sample.trial = t;
            auto annulus_field = [&](int role) {
                spectral::RandomFieldSpec rs;
                rs.seed = derive_seed(spec.seed, j, t, role);
                rs.k_max = grid.n / 2 - 1;
                rs.annulus = std::make_pair(0.5 * y, 2.0 * y);
                sample.seeds.push_back(rs.seed);
                return spectral::random_field(grid, rs);
            };
            const SpectralField f = annulus_field(0);
            SpectralField g(grid);
            if (spec.constant_g) {
                g[0] = cplx(static_cast<double>(grid.n), 0.0);
            } else {
                spectral::RandomFieldSpec rs;
                rs.seed = derive_seed(spec.seed, j, t, 2);
                rs.k_max = spec.g_k_max;
                sample.seeds.push_back(rs.seed);
                g = spectral::random_field(grid, rs);
            }
            SpectralField h = spec.adversarial_h ? commutator_projection(f, g, spec, j) : SpectralField(grid);
            if (spectral::l2_norm(h) == 0.0) h = annulus_field(1);
            sample.lhs = std::abs(commutator_pairing(f, g, h, spec, j));

            const double nf = spectral::l2_norm(f);
            const double nh = spectral::l2_norm(h);
            switch (spec.variant) {
                case CommutatorVariant::Localized: {
                    const double pj = multipliers::eval_symbol(suite.p(), y);
                    const double paj = multipliers::eval_symbol(suite.p_a, y);
                    const double wj = multipliers::eval_symbol(omega, y);
                    sample.rhs = (pj * gamma_y + paj / wj) * std::pow(y, spec.eps) *
                                 norm_of(g, 2.0 - spec.s - spec.eps, omega, false) * nf * nh;
                    break;
                }
                case CommutatorVariant::NonLocalized: {
                    const double delta = 0.5 * spec.eps;
                    sample.rhs = norm_of(g, 2.0 - spec.s - delta, Symbol::identity(), false) *
                                 (norm_of(f, spec.eps, suite.p_a, true) * nh + norm_of(h, spec.eps, suite.p_a, true) * nf);
                    break;
                }
                case CommutatorVariant::Gevrey: {
                    const Symbol nu = suite.nu;
                    const double lambda = spec.lambda;
                    const std::vector<double> e = spectral::radial_table(
                        grid, [&](double r) { return std::exp(lambda * multipliers::eval_symbol(nu, r)); });
                    const std::vector<double> lam =
                        spectral::radial_table(grid, [&](double r) { return r; });
                    const SpectralField ef = spectral::apply_table(f, e);
                    const SpectralField leg = spectral::apply_table(spectral::apply_table(g, e), lam);
                    const double a = spec.s_first;
                    const double b = spec.s_second;
                    const double big_gamma = multipliers::eval_symbol(omega, y) * gamma_y;
                    sample.rhs = (1.0 + lambda) * std::exp(lambda) * std::pow(y, spec.r - a - b + 1.0) * big_gamma *
                                 (pi_term(ef, a, leg, b) + pi_term(leg, b, ef, a) + rho_term(ef, a, leg, b)) * nh;
                    break;
                }
            }
            sample.ratio = safe_ratio(sample.lhs, sample.rhs);
            out.push_back(std::move(sample));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<ProbeSample> probe_product(const ProductProbeSpec& spec) {
    spec.grid.validate();
    if (!(spec.s <= 1.0 && spec.s_bar <= 1.0 && spec.s + spec.s_bar > 0.0)) {
        throw Error(Errc::InvalidArgument, "product estimate needs s, sbar <= 1 and s + sbar > 0");
    }
    if (spec.j_min > spec.j_max || spec.trials < 1) throw Error(Errc::RangeTooNarrow, "empty probe range");
    const GridSpec& grid = spec.grid;
    if (std::ldexp(1.0, spec.j_max - 1) >= grid.n / 2 * grid.k_unit()) {
        throw Error(Errc::RangeTooNarrow, "shell j_max lies beyond the grid");
    }
    const Symbol omega = spec.suite.omega();
    const Symbol m1 = spec.suite.m1();
    const int m = 2 * grid.n;
    std::vector<ProbeSample> out;
    for (int j = spec.j_min; j <= spec.j_max; ++j) {
        const double y = std::ldexp(1.0, j);
        const double wj = multipliers::eval_symbol(omega, y);
        const double big_gamma = wj * std::pow(multipliers::eval_symbol(m1, y), 0.5 * spec.suite.gamma);
        for (int t = 0; t < spec.trials; ++t) {
            ProbeSample sample;
            sample.j = j;
            sample.trial = t;
            spectral::RandomFieldSpec fs;
            fs.seed = derive_seed(spec.seed, j, t, 10);
            fs.k_max = grid.n / 2 - 1;
            fs.annulus = std::make_pair(0.5 * y, 2.0 * y);
            spectral::RandomFieldSpec gs;
            gs.seed = derive_seed(spec.seed, j, t, 11);
            gs.k_max = spec.g_k_max;
            sample.seeds = {fs.seed, gs.seed};
            const SpectralField f = spectral::random_field(grid, fs);
            const SpectralField g = spectral::random_field(grid, gs);
            const SpectralField fg = mul(spectral::pad(f, m), spectral::pad(g, m));
            sample.lhs = spectral::l2_norm(spectral::lp_block(fg, j));
            const double s = spec.s;
            const double sb = spec.s_bar;
            sample.rhs = std::pow(y, -(s + sb - 1.0)) * big_gamma / wj *
                         (pi_term(f, s, g, sb) + pi_term(g, sb, f, s) + rho_term(f, s, g, sb));
            sample.ratio = safe_ratio(sample.lhs, sample.rhs);
            out.push_back(std::move(sample));
        }
    }
    return out;
}

double bony_residual(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw Error(Errc::ShapeMismatch, "product of fields on different grids");
    const int m = 2 * f.grid().n;
    const SpectralField fp = spectral::pad(f, m);
    const SpectralField gp = spectral::pad(g, m);
    const int j_max = spectral::default_j_max(fp.grid());
    const spectral::LPBlocks fb = spectral::lp_partition(fp, 0, j_max);
    const spectral::LPBlocks gb = spectral::lp_partition(gp, 0, j_max);

    // Index -1 is the low part.
    auto physical = [](const spectral::LPBlocks& b) {
        std::vector<std::pair<int, PhysicalField>> out;
        out.emplace_back(b.j_min - 1, spectral::transform_backward(b.low));
        for (const auto& [j, x] : b.blocks) out.emplace_back(j, spectral::transform_backward(x));
        return out;
    };
    const auto fphys = physical(fb);
    const auto gphys = physical(gb);
    const GridSpec big = fp.grid();
    PhysicalField t_fg(big);
    PhysicalField t_gf(big);
    PhysicalField rem(big);
    for (const auto& [i, a] : fphys) {
        for (const auto& [k, b] : gphys) {
            PhysicalField& dst = i <= k - 4 ? t_fg : (k <= i - 4 ? t_gf : rem);
            for (std::size_t x = 0; x < a.values.size(); ++x) dst.values[x] += a.values[x] * b.values[x];
        }
    }
    PhysicalField sum(big);
    for (std::size_t x = 0; x < sum.values.size(); ++x) sum.values[x] = t_fg.values[x] + t_gf.values[x] + rem.values[x];
    const SpectralField product = mul(fp, gp);
    const double denom = spectral::l2_norm(product);
    const double diff = spectral::l2_norm(product - spectral::transform_forward(sum));
    return denom > 0.0 ? diff / denom : diff;
}

// ---------------------------------------------------------------------------

double ShellSummary::top_variation() const {
    if (per_shell.size() < 2) return 1.0;
    const double a = per_shell[per_shell.size() - 1].second;
    const double b = per_shell[per_shell.size() - 2].second;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi == 0.0) return 1.0;
    return lo > 0.0 ? hi / lo : kInf;
}

ShellSummary summarize(const std::vector<ProbeSample>& samples) {
    std::map<int, double> shells;
    ShellSummary out;
    for (const auto& s : samples) {
        auto [it, fresh] = shells.emplace(s.j, s.ratio);
        if (!fresh) it->second = std::max(it->second, s.ratio);
        out.max_ratio = std::max(out.max_ratio, s.ratio);
        if (std::isnan(s.ratio)) out.max_ratio = s.ratio;
    }
    out.per_shell.assign(shells.begin(), shells.end());
    return out;
}

ThresholdComparison compare_threshold(const multipliers::ThresholdScan& scan, double mu_step) {
    ThresholdComparison out;
    for (std::size_t c = 0; c < scan.mutilde.size(); ++c) {
        const double edge = scan.mutilde[c] + 0.5;
        int column = 0;
        for (std::size_t r = 0; r < scan.mu.size(); ++r) {
            const bool expected = scan.mu[r] > edge + 1e-9;
            if (scan.admissible[r][c] == expected) continue;
            ++out.disagreements;
            ++column;
            if (std::abs(scan.mu[r] - edge) > mu_step + 1e-9) ++out.non_adjacent;
        }
        out.max_per_column = std::max(out.max_per_column, column);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

ExperimentReport start(const std::string& id, const Config& cfg) {
    ExperimentReport rep;
    rep.id = id;
    rep.config_digest = cfg.digest();
    return rep;
}

void save(ExperimentReport& rep, const ArtifactDir& dir, const std::string& name, const CsvTable& table) {
    if (!dir) return;
    const auto path = *dir / (rep.id + "_" + name + ".csv");
    table.write(path);
    rep.artifacts.push_back(path);
}

void add_samples(CsvTable& table, const std::vector<ProbeSample>& samples) {
    for (const auto& s : samples) table.rows.push_back({double(s.j), double(s.trial), s.lhs, s.rhs, s.ratio});
}

int top_shell(const GridSpec& g) { return static_cast<int>(std::lround(std::log2(double(g.n)))) - 2; }

void assert_shells(ExperimentReport& rep, const std::string& name, const std::vector<ProbeSample>& samples) {
    const ShellSummary sum = summarize(samples);
    rep.check_flag(name + "_max_ratio_finite", std::isfinite(sum.max_ratio));
    rep.record(name + "_c_emp", sum.max_ratio);
    for (const auto& [j, v] : sum.per_shell) rep.record(name + "_shell" + std::to_string(j) + "_max", v);
    rep.check(name + "_top_shell_variation", sum.top_variation(), 2.0);
}

}  // namespace

ExperimentReport exp_commutator(const Config& cfg, const ArtifactDir& dir) {
    ExperimentReport rep = start("commutator", cfg);
    CommutatorProbeSpec base;
    base.grid = cfg.grid;
    base.suite = cfg.suite;
    base.seed = cfg.seed;
    base.j_min = 3;
    base.j_max = top_shell(cfg.grid);
    rep.record("delta", 0.5 * base.eps);
    rep.record("c_j", 1.0);

    const std::pair<CommutatorVariant, const char*> variants[] = {{CommutatorVariant::Localized, "localized"},
                                                                  {CommutatorVariant::NonLocalized, "nonlocalized"},
                                                                  {CommutatorVariant::Gevrey, "gevrey"}};
    for (const auto& [variant, name] : variants) {
        CommutatorProbeSpec spec = base;
        spec.variant = variant;
        if (variant == CommutatorVariant::Gevrey) spec.lambda = 0.05;
        const std::vector<ProbeSample> samples = probe_commutator(spec);
        assert_shells(rep, name, samples);
        CsvTable table{{"j", "trial", "lhs", "rhs", "ratio"}, {}};
        add_samples(table, samples);
        save(rep, dir, name, table);

        CommutatorProbeSpec flat = spec;
        flat.constant_g = true;
        flat.trials = 3;
        flat.adversarial_h = false;
        double worst = 0.0;
        for (const auto& s : probe_commutator(flat)) worst = std::max(worst, s.lhs);
        rep.check(std::string(name) + "_constant_g_lhs", worst, 1e-13);

        // Physical-space evaluation against the triad sum.
        double cross = 0.0;
        for (int t = 0; t < 2; ++t) {
            const int j = spec.j_min;
            const double y = std::ldexp(1.0, j);
            spectral::RandomFieldSpec rs;
            rs.k_max = cfg.grid.n / 2 - 1;
            rs.annulus = std::make_pair(0.5 * y, 2.0 * y);
            rs.seed = derive_seed(cfg.seed, j, t, 20);
            const SpectralField f = spectral::random_field(cfg.grid, rs);
            rs.seed = derive_seed(cfg.seed, j, t, 21);
            const SpectralField h = spectral::random_field(cfg.grid, rs);
            spectral::RandomFieldSpec gs;
            gs.seed = derive_seed(cfg.seed, j, t, 22);
            gs.k_max = spec.g_k_max;
            const SpectralField g = spectral::random_field(cfg.grid, gs);
            const double a = commutator_pairing(f, g, h, spec, j);
            const double b = commutator_pairing_triads(f, g, h, spec, j);
            cross = std::max(cross, std::abs(a - b) / std::max(std::abs(a), 1e-300));
        }
        rep.check(std::string(name) + "_triad_cross_check", cross, 1e-11);
    }
    return rep;
}

ExperimentReport exp_product(const Config& cfg, const ArtifactDir& dir) {
    ExperimentReport rep = start("product", cfg);
    ProductProbeSpec spec;
    spec.grid = cfg.grid;
    spec.suite = cfg.suite;
    spec.seed = cfg.seed;
    spec.j_max = top_shell(cfg.grid);
    rep.record("c_j", 1.0);
    const std::vector<ProbeSample> samples = probe_product(spec);
    assert_shells(rep, "product", samples);
    CsvTable table{{"j", "trial", "lhs", "rhs", "ratio"}, {}};
    add_samples(table, samples);
    save(rep, dir, "samples", table);

    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        spectral::RandomFieldSpec rs;
        rs.seed = derive_seed(cfg.seed, 0, t, 30);
        const SpectralField f = spectral::random_field(cfg.grid, rs);
        rs.seed = derive_seed(cfg.seed, 0, t, 31);
        const SpectralField g = spectral::random_field(cfg.grid, rs);
        worst = std::max(worst, bony_residual(f, g));
    }
    rep.check("bony_residual", worst, 1e-11);
    return rep;
}

ExperimentReport exp_lp_machinery(const Config& cfg, const ArtifactDir& dir) {
    ExperimentReport rep = start("lp", cfg);
    const GridSpec& grid = cfg.grid;
    const int j_max = spectral::default_j_max(grid);

    double recon = 0.0;
    double bern_lo[2] = {kInf, kInf};
    double bern_hi[2] = {0.0, 0.0};
    double besov_lo = kInf;
    double besov_hi = 0.0;
    CsvTable table{{"trial", "besov_over_sobolev"}, {}};
    for (int t = 0; t < 100; ++t) {
        spectral::RandomFieldSpec rs;
        rs.seed = derive_seed(cfg.seed, 0, t, 40);
        rs.k_max = grid.n / 2 - 1;
        const SpectralField f = spectral::random_field(grid, rs);
        const spectral::LPBlocks blocks = spectral::lp_partition(f, 0, j_max);
        recon = std::max(recon, spectral::l2_norm(blocks.reconstruct() - f) / spectral::l2_norm(f));
        if (t < 10) {
            for (int si = 0; si < 2; ++si) {
                const double sigma = si + 1.0;
                for (const auto& [j, b] : blocks.blocks) {
                    if (spectral::l2_norm(b) == 0.0) continue;
                    const double r = spectral::bernstein_probe(j, b, sigma);
                    bern_lo[si] = std::min(bern_lo[si], r);
                    bern_hi[si] = std::max(bern_hi[si], r);
                }
            }
        }
        const double ratio = spectral::besov_norm(blocks, 1.0) / norm_of(f, 1.0, Symbol::identity(), true);
        besov_lo = std::min(besov_lo, ratio);
        besov_hi = std::max(besov_hi, ratio);
        table.rows.push_back({double(t), ratio});
    }
    rep.check("reconstruction_residual", recon, 1e-12);
    for (int si = 0; si < 2; ++si) {
        const double sigma = si + 1.0;
        const std::string name = "bernstein_sigma" + std::to_string(si + 1);
        rep.check(name + "_min", bern_lo[si], std::pow(2.0, -sigma), Relation::GreaterEqual);
        rep.check(name + "_max", bern_hi[si], std::pow(2.0, sigma));
    }
    rep.check("besov_sobolev_c_emp", std::max(besov_hi, 1.0 / besov_lo), 4.0);
    save(rep, dir, "besov", table);
    return rep;
}

ExperimentReport exp_log_identity(const Config& cfg, const ArtifactDir& dir) {
    ExperimentReport rep = start("logidentity", cfg);
    CsvTable table{{"lambda", "quadrature", "exact", "error"}, {}};
    for (double lambda : {0.5, 1.0, 2.0, 10.0, 100.0}) {
        const double q = multipliers::log_identity_quadrature(lambda);
        const double exact = std::log1p(lambda);
        const double err = std::abs(q - exact);
        rep.check("lambda" + multipliers::format_real(lambda) + "_error", err, 1e-8);
        table.rows.push_back({lambda, q, exact, err});
    }
    save(rep, dir, "values", table);
    return rep;
}

ExperimentReport exp_threshold(const Config& cfg, multipliers::LogFamily family, const ArtifactDir& dir) {
    const bool log = family == multipliers::LogFamily::Log;
    ExperimentReport rep = start(log ? "threshold" : "threshold_iterlog", cfg);
    std::vector<double> mu;
    for (int i = 1; i <= 10; ++i) mu.push_back(0.2 * i);
    const std::vector<double> mutilde{-0.5, 0.0, 0.5, 1.0};
    const multipliers::ThresholdScan scan = multipliers::threshold_scan(family, mu, mutilde);
    const ThresholdComparison cmp = compare_threshold(scan, 0.2);
    rep.record("disagreements", double(cmp.disagreements));
    rep.check("non_adjacent_disagreements", cmp.non_adjacent, 0.0, Relation::Equal);
    rep.check("max_disagreements_per_column", cmp.max_per_column, 1.0);
    CsvTable table{{"mu", "mutilde", "admissible", "rule"}, {}};
    for (std::size_t r = 0; r < mu.size(); ++r) {
        for (std::size_t c = 0; c < mutilde.size(); ++c) {
            table.rows.push_back({mu[r], mutilde[c], scan.admissible[r][c] ? 1.0 : 0.0,
                                  mu[r] > mutilde[c] + 0.5 + 1e-9 ? 1.0 : 0.0});
        }
    }
    save(rep, dir, "grid", table);
    return rep;
}

}  // namespace gsqg::harness
