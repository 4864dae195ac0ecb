#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wiretap {

/// Thrown when a quadrature rule fails to reach its tolerance.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double m, double b, double fa, double fm,
                            double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw quadrature_error("adaptive Simpson did not converge on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]");
    return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [a,b] to absolute tolerance
/// abs_tol. The interval is pre-split into initial_panels uniform panels so
/// multi-modal integrands are not missed by the first coarse pass.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol, int max_depth = 48,
                        int initial_panels = 16) {
    if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: bad interval");
    if (a == b) return 0.0;
    double total = 0.0;
    const double panel_tol = abs_tol / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + (b - a) * i / initial_panels;
        const double hi = a + (b - a) * (i + 1) / initial_panels;
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo), fmid = f(mid), fhi = f(hi);
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += detail::adaptive_simpson_rec(f, lo, mid, hi, flo, fmid, fhi, whole, panel_tol,
                                              max_depth);
    }
    return total;
}

/// Gauss-Legendre nodes and weights on [-1, 1]. Newton iteration on the
/// Legendre recurrence.
inline std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<std::pair<double, double>> out(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        out[i] = {-z, w};
        out[n - 1 - i] = {z, w};
    }
    return out;
}

}  // namespace wiretap
