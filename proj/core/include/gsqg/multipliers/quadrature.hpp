#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsqg/error.hpp"

namespace gsqg::multipliers {

struct QuadratureSpec {
    double abs_tol = 1e-10;  ///< relative to the integrand scale on each segment
    int max_depth = 40;
    int min_depth = 3;
};

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double eps, int depth, const QuadratureSpec& spec) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double both = left + right;
    const double delta = both - whole;
    const double guard = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(both);
    if (depth >= spec.min_depth && (std::abs(delta) <= 15.0 * eps || std::abs(delta) <= guard)) {
        return both + delta / 15.0;
    }
    if (depth >= spec.max_depth) {
        throw Error(Errc::QuadratureFailure, "adaptive Simpson exceeded depth budget");
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1, spec) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1, spec);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
///
/// The tolerance is abs_tol times the integrand scale, taken as the larger of
/// the coarse Simpson estimate and (b - a) * max|f| at the three coarse nodes.
template <class F>
double adaptive_simpson(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
        throw Error(Errc::QuadratureFailure, "non-finite integrand");
    }
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale =
        std::max(std::abs(whole), std::abs(b - a) * std::max({std::abs(fa), std::abs(fm), std::abs(fb)}));
    const double result = detail::simpson_step(f, a, b, fa, fm, fb, whole, spec.abs_tol * scale, 0, spec);
    if (!std::isfinite(result)) throw Error(Errc::QuadratureFailure, "non-finite quadrature result");
    return result;
}

}  // namespace gsqg::multipliers
