#include "gsqg/multipliers/class_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/multipliers/quadrature.hpp"

namespace gsqg::multipliers {

std::string_view to_string(MultiplierClass cls) noexcept {
    switch (cls) {
        case MultiplierClass::W: return "W";
        case MultiplierClass::C: return "C";
        case MultiplierClass::D: return "D";
        case MultiplierClass::S: return "S";
    }
    return "?";
}

std::string_view to_string(Property property) noexcept {
    switch (property) {
        case Property::O1: return "O1";
        case Property::O2: return "O2";
        case Property::O3: return "O3";
        case Property::S1: return "S1";
        case Property::S2: return "S2";
        case Property::DominatedByM: return "dominated-by-m";
        case Property::McDivergence: return "MC-divergence";
    }
    return "?";
}

std::vector<double> RGrid::points() const {
    if (!(r_min > 0.0) || !(r_max > r_min) || points_per_decade < 1) {
        throw Error(Errc::InvalidArgument, "RGrid requires 0 < r_min < r_max and points_per_decade >= 1");
    }
    std::vector<double> pts;
    if (include_zero) pts.push_back(0.0);
    const double decades = std::log10(r_max / r_min);
    const int n = static_cast<int>(std::ceil(decades * points_per_decade - 1e-9));
    for (int i = 0; i <= n; ++i) {
        const double r = i == n ? r_max : r_min * std::pow(10.0, static_cast<double>(i) / points_per_decade);
        pts.push_back(r);
    }
    return pts;
}

bool ClassReport::passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const PropertyVerdict& v) { return v.pass; });
}

const PropertyVerdict* ClassReport::find(Property property) const {
    for (const auto& v : verdicts) {
        if (v.property == property) return &v;
    }
    return nullptr;
}

namespace {

PropertyVerdict make_verdict(Property property) {
    PropertyVerdict v;
    v.property = property;
    return v;
}

struct Sample {
    double r;
    double value;
};

// Sup over the top two decades of the grid versus the two decades below.
// Returns true when the sup is finite and not growing.
bool bounded_trend(const std::vector<Sample>& samples, double r_max, double tol, std::string& note) {
    double top = 0.0;
    double prev = 0.0;
    for (const auto& s : samples) {
        if (!std::isfinite(s.value)) {
            note = "non-finite ratio";
            return false;
        }
        if (s.r >= r_max * 1e-2) {
            top = std::max(top, s.value);
        } else if (s.r >= r_max * 1e-4) {
            prev = std::max(prev, s.value);
        }
    }
    if (top <= 0.0) return true;
    if (prev <= 0.0) {
        note = "sup grows from zero in the top decades";
        return false;
    }
    const double ratio = top / prev;
    std::ostringstream os;
    os << "trend ratio " << ratio;
    note = os.str();
    return ratio <= 1.0 + tol;
}

PropertyVerdict check_o1(const std::vector<Symbol>& factors, const std::vector<double>& pts) {
    PropertyVerdict v = make_verdict(Property::O1);
    v.pass = true;
    double worst = 0.0;
    for (const auto& f : factors) {
        double prev_val = -1.0;
        for (double r : pts) {
            double val = 0.0;
            try {
                val = eval_symbol(f, r);
            } catch (const Error& e) {
                if (e.code() == Errc::SingularAtOrigin) continue;
                v.pass = false;
                v.worst_r = r;
                v.note = e.what();
                return v;
            }
            if (!(val > 0.0)) {
                v.pass = false;
                v.worst_r = r;
                v.note = "not positive in " + f.to_string();
                return v;
            }
            if (prev_val > 0.0) {
                const double drop = (prev_val - val) / prev_val;
                if (drop > worst) {
                    worst = drop;
                    v.worst_r = r;
                }
            }
            prev_val = val;
        }
    }
    v.constant = worst;
    // Monotone up to roundoff.
    if (worst > 1e-12) {
        v.pass = false;
        v.note = "decreasing on the grid";
    }
    return v;
}

PropertyVerdict check_log_derivative(Property prop, const std::vector<Symbol>& factors,
                                     const std::vector<double>& pts, double r_max, double tol,
                                     bool divide_by_value) {
    PropertyVerdict v = make_verdict(prop);
    v.pass = true;
    double sup = 0.0;
    for (const auto& f : factors) {
        std::vector<Sample> samples;
        for (double r : pts) {
            if (r <= 0.0) continue;
            double ratio = 0.0;
            try {
                const double d = eval_derivative(f, r);
                ratio = divide_by_value ? r * d / eval_symbol(f, r) : r * d;
            } catch (const Error& e) {
                v.pass = false;
                v.worst_r = r;
                v.note = e.what();
                return v;
            }
            samples.push_back({r, ratio});
            if (ratio > sup || !std::isfinite(ratio)) {
                sup = ratio;
                v.worst_r = r;
            }
        }
        std::string note;
        if (!bounded_trend(samples, r_max, tol, note)) {
            v.pass = false;
            v.note = note + " in " + f.to_string();
        } else if (v.note.empty()) {
            v.note = note;
        }
    }
    v.constant = sup;
    return v;
}

PropertyVerdict check_o3(const std::vector<Symbol>& factors, const std::vector<double>& pts, double r_max,
                         double tol) {
    PropertyVerdict v = make_verdict(Property::O3);
    v.pass = true;
    std::vector<double> coarse;
    for (std::size_t i = 0; i < pts.size(); i += 2) {
        if (pts[i] > 0.0) coarse.push_back(pts[i]);
    }
    if (coarse.back() != pts.back()) coarse.push_back(pts.back());
    double sup = 0.0;
    for (const auto& f : factors) {
        std::vector<double> vals(coarse.size());
        for (std::size_t i = 0; i < coarse.size(); ++i) vals[i] = eval_symbol(f, coarse[i]);
        std::vector<Sample> samples;
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            double row_sup = 0.0;
            for (std::size_t j = 0; j <= i; ++j) {
                double prod_val = 0.0;
                try {
                    prod_val = eval_symbol(f, coarse[i] * coarse[j]);
                } catch (const Error& e) {
                    v.pass = false;
                    v.worst_r = coarse[i];
                    v.note = e.what();
                    return v;
                }
                const double ratio = prod_val / (vals[i] + vals[j]);
                row_sup = std::max(row_sup, ratio);
                if (ratio > sup) {
                    sup = ratio;
                    v.worst_r = coarse[i];
                }
            }
            samples.push_back({coarse[i], row_sup});
        }
        std::string note;
        if (!bounded_trend(samples, r_max, tol, note)) {
            v.pass = false;
            v.note = note + " in " + f.to_string();
        } else if (v.note.empty()) {
            v.note = note;
        }
    }
    v.constant = sup;
    return v;
}

std::vector<Symbol> factors_of(const Symbol& sym) {
    const QuotientParts parts = decompose_quotient(sym);
    std::vector<Symbol> out{parts.numerator};
    if (parts.denominator.kind() != Symbol::Kind::Identity) out.push_back(parts.denominator);
    return out;
}

std::optional<bool> symbolic_divergence(const Symbol& p) {
    using K = Symbol::Kind;
    switch (p.kind()) {
        case K::Identity: return true;
        case K::Constant: return p.parameter() > 0.0;
        case K::PowerLaw: return p.parameter() >= 0.0;
        case K::LogPower: return 2.0 * p.parameter() >= -1.0;
        case K::IterLogPower: return true;
        default: return std::nullopt;
    }
}

}  // namespace

DivergenceVerdict mc_divergence_by_quadrature(const Symbol& p, double tol) {
    DivergenceVerdict out;
    out.cutoffs = {1e3, 1e6, 1e9, 1e12};
    const auto integrand = [&](double u) {
        const double v = eval_symbol(p, std::exp(u));
        return v * v;
    };
    double acc = 0.0;
    double u_prev = 0.0;
    QuadratureSpec spec;
    for (double y : out.cutoffs) {
        const double u = std::log(y);
        // Unit-width panels in u keep every Simpson segment well resolved.
        const int panels = static_cast<int>(std::ceil(u - u_prev));
        for (int k = 0; k < panels; ++k) {
            const double a = u_prev + (u - u_prev) * k / panels;
            const double b = u_prev + (u - u_prev) * (k + 1) / panels;
            acc += adaptive_simpson(integrand, a, b, spec);
        }
        out.integrals.push_back(acc);
        u_prev = u;
    }
    const auto& I = out.integrals;
    const double d_prev = I[2] - I[1];
    const double d_last = I[3] - I[2];
    const double u2 = std::log(out.cutoffs[1]);
    const double u3 = std::log(out.cutoffs[2]);
    const double u4 = std::log(out.cutoffs[3]);
    // Increment ratio the borderline integrand 1/u would produce.
    const double harmonic = std::log(u4 / u3) / std::log(u3 / u2);
    if (d_prev <= 0.0) {
        out.growth_ratio = 0.0;
        out.divergent = false;
        return out;
    }
    out.growth_ratio = (d_last / d_prev) / harmonic;
    out.divergent = out.growth_ratio >= 1.0 - tol;
    return out;
}

DivergenceVerdict mc_divergence(const Symbol& p, double tol) {
    if (const auto s = symbolic_divergence(p)) {
        DivergenceVerdict out;
        out.divergent = *s;
        out.symbolic = true;
        return out;
    }
    return mc_divergence_by_quadrature(p, tol);
}

ClassReport verify_class(const Symbol& sym, MultiplierClass cls, const RGrid& grid, double tol,
                         const std::optional<Symbol>& m) {
    if (grid.r_max < 1e6) throw Error(Errc::GridTooSmall, "class checks need r_max >= 1e6");
    ClassReport report{cls, sym.to_string(), grid, tol, {}};
    const std::vector<double> pts = grid.points();

    switch (cls) {
        case MultiplierClass::W:
        case MultiplierClass::D: {
            const std::vector<Symbol> factors =
                cls == MultiplierClass::W ? factors_of(sym) : std::vector<Symbol>{Symbol::one_plus(sym)};
            report.verdicts.push_back(check_o1(factors, pts));
            report.verdicts.push_back(check_log_derivative(Property::O2, factors, pts, grid.r_max, tol, true));
            report.verdicts.push_back(check_o3(factors, pts, grid.r_max, tol));
            break;
        }
        case MultiplierClass::C: {
            const std::vector<Symbol> factors = factors_of(sym);
            report.verdicts.push_back(check_o1(factors, pts));
            report.verdicts.push_back(check_log_derivative(Property::O2, factors, pts, grid.r_max, tol, true));
            const DivergenceVerdict d = mc_divergence(sym, tol);
            PropertyVerdict v = make_verdict(Property::McDivergence);
            v.pass = d.divergent;
            v.constant = d.symbolic ? 0.0 : d.growth_ratio;
            v.note = d.symbolic ? "decided symbolically" : "quadrature growth heuristic";
            report.verdicts.push_back(v);
            break;
        }
        case MultiplierClass::S: {
            // S1 allows nu(0) = 0, so only sign and monotonicity are checked.
            PropertyVerdict s1 = make_verdict(Property::S1);
            s1.pass = true;
            double prev = 0.0;
            for (double r : pts) {
                const double val = eval_symbol(sym, r);
                if (val < 0.0 || val < prev * (1.0 - 1e-12)) {
                    s1.pass = false;
                    s1.worst_r = r;
                    s1.note = val < 0.0 ? "negative value" : "decreasing on the grid";
                    break;
                }
                prev = val;
            }
            report.verdicts.push_back(s1);
            report.verdicts.push_back(check_log_derivative(Property::S2, {sym}, pts, grid.r_max, tol, false));
            if (m) {
                PropertyVerdict v = make_verdict(Property::DominatedByM);
                v.pass = true;
                std::vector<Sample> samples;
                double sup = 0.0;
                for (double r : pts) {
                    const double ratio = eval_symbol(sym, r) / (1.0 + eval_symbol(*m, r));
                    samples.push_back({r, ratio});
                    if (ratio > sup) {
                        sup = ratio;
                        v.worst_r = r;
                    }
                }
                v.constant = sup;
                v.pass = bounded_trend(samples, grid.r_max, tol, v.note);
                report.verdicts.push_back(v);
            }
            break;
        }
    }
    return report;
}

}  // namespace gsqg::multipliers
