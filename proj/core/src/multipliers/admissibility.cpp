#include "gsqg/multipliers/admissibility.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg::multipliers {

Symbol MultiplierSuite::p() const { return Symbol::quotient(p_a, p_b); }

Symbol MultiplierSuite::omega() const { return Symbol::quotient(omega_a, omega_b); }

Symbol MultiplierSuite::m1() const { return Symbol::one_plus(m); }

Symbol MultiplierSuite::a() const { return Symbol::product(Symbol::power_law(beta - 2.0), p()); }

void MultiplierSuite::validate(const RGrid& grid) const {
    if (!(gamma > 0.0 && gamma < 1.0)) throw Error(Errc::InvalidArgument, "gamma must lie in (0,1)");
    if (!(beta >= 0.0 && beta <= 2.0)) throw Error(Errc::InvalidArgument, "beta must lie in [0,2]");
    const std::vector<double> pts = grid.points();
    const auto check_monotone = [&](const Symbol& s, const char* name) {
        double prev = 0.0;
        for (double r : pts) {
            const double v = eval_symbol(s, r);
            if (v < 0.0) throw Error(Errc::InvalidArgument, std::string(name) + " is negative");
            if (v < prev * (1.0 - 1e-12)) throw Error(Errc::InvalidArgument, std::string(name) + " is decreasing");
            prev = v;
        }
    };
    for (double r : pts) {
        if (eval_symbol(m, r) < 0.0) throw Error(Errc::InvalidArgument, "m is negative, so m1 < 1");
    }
    check_monotone(p_a, "p_a");
    check_monotone(p_b, "p_b");
    check_monotone(omega_a, "omega_a");
    check_monotone(omega_b, "omega_b");
    check_monotone(nu, "nu");
}

MultiplierSuite log_family_suite(LogFamily family, double mu, double mutilde, double beta) {
    MultiplierSuite s;
    const auto leaf = [family](double e) {
        return family == LogFamily::Log ? Symbol::log_power(e) : Symbol::iter_log_power(e);
    };
    s.m = leaf(mu);
    s.nu = s.m;
    const QuotientParts p = decompose_quotient(leaf(mutilde));
    s.p_a = p.numerator;
    s.p_b = p.denominator;
    s.omega_a = family == LogFamily::Log ? Symbol::identity() : Symbol::log_power(0.5);
    s.omega_b = Symbol::identity();
    s.beta = beta;
    return s;
}

std::vector<double> YGrid::points() const {
    if (!(y_min > 0.0) || !(y_max > y_min) || points_per_decade < 1) {
        throw Error(Errc::InvalidArgument, "YGrid requires 0 < y_min < y_max and points_per_decade >= 1");
    }
    const double decades = std::log10(y_max / y_min);
    const int n = static_cast<int>(std::ceil(decades * points_per_decade - 1e-9));
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        pts.push_back(i == n ? y_max : y_min * std::pow(10.0, static_cast<double>(i) / points_per_decade));
    }
    return pts;
}

namespace {

double squared_ratio(const Symbol& num, const Symbol& den, double r, const char* what) {
    double a = 0.0;
    double b = 0.0;
    try {
        a = eval_symbol(num, r);
        b = eval_symbol(den, r);
    } catch (const Error& e) {
        if (e.code() == Errc::Overflow) throw;
        throw Error(Errc::SingularIntegrand, std::string(what) + " undefined: " + e.what());
    }
    if (b == 0.0) throw Error(Errc::SingularIntegrand, std::string(what) + " has a zero denominator");
    const double q = a / b;
    return q * q;
}

}  // namespace

AdmissibilityProfile admissibility_profile(const MultiplierSuite& suite, const YGrid& grid,
                                           const QuadratureSpec& quad) {
    if (grid.y_max < 1e12) throw Error(Errc::InvalidArgument, "admissibility needs y_max >= 1e12");
    AdmissibilityProfile prof;
    prof.y = grid.points();

    // 1/omega^2 and p^2/omega^2, each already multiplied by r/(1+r^2).
    const auto weight_j = [&](double r) {
        if (r == 0.0) return 0.0;
        return squared_ratio(suite.omega_b, suite.omega_a, r, "omega") / (r + 1.0 / r);
    };
    const auto weight_k = [&](double r) {
        if (r == 0.0) return 0.0;
        return squared_ratio(suite.p_a, suite.p_b, r, "p") * squared_ratio(suite.omega_b, suite.omega_a, r, "omega") /
               (r + 1.0 / r);
    };
    // Same integrands after r = e^u, including the Jacobian r.
    const auto log_j = [&](double u) {
        const double r = std::exp(u);
        return squared_ratio(suite.omega_b, suite.omega_a, r, "omega") / (1.0 + std::exp(-2.0 * u));
    };
    const auto log_k = [&](double u) {
        const double r = std::exp(u);
        return squared_ratio(suite.p_a, suite.p_b, r, "p") * squared_ratio(suite.omega_b, suite.omega_a, r, "omega") /
               (1.0 + std::exp(-2.0 * u));
    };

    double J = 0.0;
    double K = 0.0;
    double prev = 0.0;
    prof.integral.reserve(prof.y.size());
    for (double y : prof.y) {
        if (y <= 1.0) {
            J += adaptive_simpson(weight_j, prev, y, quad);
            K += adaptive_simpson(weight_k, prev, y, quad);
        } else {
            const double lo = std::log(std::max(prev, 1.0));
            const double hi = std::log(y);
            if (prev < 1.0) {
                J += adaptive_simpson(weight_j, prev, 1.0, quad);
                K += adaptive_simpson(weight_k, prev, 1.0, quad);
            }
            J += adaptive_simpson(log_j, lo, hi, quad);
            K += adaptive_simpson(log_k, lo, hi, quad);
        }
        prev = y;
        const double py = squared_ratio(suite.p_a, suite.p_b, y, "p");
        prof.integral.push_back(py * J + K);
        prof.pa_omegab.push_back(eval_symbol(suite.p_a, y) * eval_symbol(suite.omega_b, y));
        prof.m1.push_back(1.0 + eval_symbol(suite.m, y));
    }
    return prof;
}

AdmissibilityResult evaluate_admissibility(const AdmissibilityProfile& prof, double gamma, const YGrid& grid) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw Error(Errc::InvalidArgument, "gamma must lie in (0,1)");
    AdmissibilityResult res;
    res.gamma = gamma;
    const double log_max = std::log(grid.y_max);
    double top1 = 0.0, prev1 = 0.0, top2 = 0.0, prev2 = 0.0;
    res.sup1_finite = true;
    res.sup2_finite = true;
    for (std::size_t i = 0; i < prof.y.size(); ++i) {
        const double scale = std::pow(prof.m1[i], -gamma);
        const double v1 = scale * std::sqrt(prof.integral[i]);
        const double v2 = scale * prof.pa_omegab[i];
        if (!std::isfinite(v1)) res.sup1_finite = false;
        if (!std::isfinite(v2)) res.sup2_finite = false;
        res.sup1 = std::max(res.sup1, v1);
        res.sup2 = std::max(res.sup2, v2);
        const double ly = std::log(prof.y[i]);
        if (ly >= 0.5 * log_max) {
            top1 = std::max(top1, v1);
            top2 = std::max(top2, v2);
        }
        if (ly >= 0.25 * log_max && ly <= 0.5 * log_max) {
            prev1 = std::max(prev1, v1);
            prev2 = std::max(prev2, v2);
        }
    }
    const auto trend = [](double top, double prev) {
        if (top == 0.0) return 0.0;
        return prev > 0.0 ? top / prev : INFINITY;
    };
    res.sup1_trend = trend(top1, prev1);
    res.sup2_trend = trend(top2, prev2);
    res.admissible = res.sup1_finite && res.sup2_finite && res.sup1_trend <= 1.0 + grid.trend_tol &&
                     res.sup2_trend <= 1.0 + grid.trend_tol;
    return res;
}

AdmissibilityResult admissibility_check(const MultiplierSuite& suite, double gamma, const YGrid& grid,
                                        const QuadratureSpec& quad) {
    return evaluate_admissibility(admissibility_profile(suite, grid, quad), gamma, grid);
}

GammaSearch admissible_for_some_gamma(const MultiplierSuite& suite, std::span<const double> gammas,
                                      const YGrid& grid, const QuadratureSpec& quad) {
    GammaSearch out;
    const AdmissibilityProfile prof = admissibility_profile(suite, grid, quad);
    for (double g : gammas) {
        out.per_gamma.push_back(evaluate_admissibility(prof, g, grid));
        out.admissible = out.admissible || out.per_gamma.back().admissible;
    }
    return out;
}

ThresholdScan threshold_scan(LogFamily family, std::span<const double> mu, std::span<const double> mutilde,
                             std::span<const double> gammas, const YGrid& grid, const QuadratureSpec& quad) {
    ThresholdScan scan{family, {mu.begin(), mu.end()}, {mutilde.begin(), mutilde.end()}, {}};
    scan.admissible.assign(mu.size(), std::vector<bool>(mutilde.size(), false));
    for (std::size_t j = 0; j < mutilde.size(); ++j) {
        // The quadrature depends on p and omega only; m enters through m1.
        AdmissibilityProfile base = admissibility_profile(log_family_suite(family, 0.0, mutilde[j]), grid, quad);
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const MultiplierSuite s = log_family_suite(family, mu[i], mutilde[j]);
            for (std::size_t k = 0; k < base.y.size(); ++k) base.m1[k] = 1.0 + eval_symbol(s.m, base.y[k]);
            bool ok = false;
            for (double g : gammas) ok = ok || evaluate_admissibility(base, g, grid).admissible;
            scan.admissible[i][j] = ok;
        }
    }
    return scan;
}

double log_identity_quadrature(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw Error(Errc::InvalidArgument, "lambda must be finite and nonnegative");
    }
    if (lambda == 0.0) return 0.0;
    const auto integrand = [lambda](double s) {
        if (s < 1e-8) return lambda * std::exp(-s) * (1.0 - 0.5 * s * lambda);
        return -std::expm1(-s * lambda) * std::exp(-s) / s;
    };
    // The tail beyond s_max is below e^(-s_max)/s_max < 1e-14.
    constexpr double s_max = 32.0;
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    double total = 0.0;
    double hi = s_max;
    // Geometric panels resolve the 1/lambda scale for any lambda.
    for (int k = 1; k <= 64; ++k) {
        const double lo = s_max * std::ldexp(1.0, -k);
        total += adaptive_simpson(integrand, lo, hi, spec);
        hi = lo;
    }
    total += adaptive_simpson(integrand, 0.0, hi, spec);
    return total;
}

}  // namespace gsqg::multipliers
