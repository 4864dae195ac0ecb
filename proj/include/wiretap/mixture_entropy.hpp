#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wiretap/quadrature.hpp"

namespace wiretap {

/// Two-component Gaussian mixture on the real line.
/// weight2 is implicitly 1 - weight1.
struct GaussianMixture1D {
    double weight1;
    double mean1;
    double mean2;
    double var1;
    double var2;
};

namespace detail {

inline void validate(const GaussianMixture1D& m) {
    if (!(m.weight1 >= 0.0 && m.weight1 <= 1.0))
        throw std::domain_error("mixture weight outside [0,1]");
    if (!(m.var1 > 0.0) || !(m.var2 > 0.0))
        throw std::domain_error("mixture variances must be strictly positive");
    if (!std::isfinite(m.mean1) || !std::isfinite(m.mean2))
        throw std::domain_error("mixture means must be finite");
}

inline double gaussian_pdf(double x, double mean, double var) {
    const double d = x - mean;
    return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * M_PI * var);
}

}  // namespace detail

/// Differential entropy of a single Gaussian, in bits.
inline double gaussian_diff_entropy(double var) {
    if (!(var > 0.0)) throw std::domain_error("variance must be strictly positive");
    return 0.5 * std::log2(2.0 * M_PI * M_E * var);
}

/// Differential entropy -Integral f log2 f of a two-component Gaussian
/// mixture, in bits, by adaptive quadrature over
/// [mu_min - 10 sigma_max, mu_max + 10 sigma_max] to abs_tol.
/// Translation invariant: shifting both means leaves the result unchanged.
/// Throws quadrature_error if the tolerance cannot be met.
inline double mixture_diff_entropy(const GaussianMixture1D& m, double abs_tol = 1e-6) {
    detail::validate(m);
    const double w1 = m.weight1, w2 = 1.0 - m.weight1;
    const double sigma1 = std::sqrt(m.var1), sigma2 = std::sqrt(m.var2);
    const double sigma_max = std::max(sigma1, sigma2);
    const double lo = std::min(m.mean1, m.mean2) - 10.0 * sigma_max;
    const double hi = std::max(m.mean1, m.mean2) + 10.0 * sigma_max;
    const auto integrand = [&](double x) {
        const double f = w1 * detail::gaussian_pdf(x, m.mean1, m.var1) +
                         w2 * detail::gaussian_pdf(x, m.mean2, m.var2);
        return f > 0.0 ? -f * std::log2(f) : 0.0;
    };
    // Integrate piecewise with breakpoints around each component so that a
    // narrow component cannot slip between the samples of the coarse pass.
    double cuts[6] = {lo,
                      m.mean1 - 6.0 * sigma1,
                      m.mean1 + 6.0 * sigma1,
                      m.mean2 - 6.0 * sigma2,
                      m.mean2 + 6.0 * sigma2,
                      hi};
    std::sort(cuts, cuts + 6);
    for (double& c : cuts) c = std::clamp(c, lo, hi);
    int pieces = 0;
    for (int i = 0; i + 1 < 6; ++i)
        if (cuts[i + 1] > cuts[i]) ++pieces;
    double total = 0.0;
    for (int i = 0; i + 1 < 6; ++i)
        if (cuts[i + 1] > cuts[i])
            total += adaptive_simpson(integrand, cuts[i], cuts[i + 1], abs_tol / pieces, 48, 16);
    return total;
}

/// Shannon binary entropy of the weight, in bits (local copy so this header
/// stays independent of info_theory.hpp).
namespace detail {
inline double weight_entropy(double w) {
    if (w <= 0.0 || w >= 1.0) return 0.0;
    return -w * std::log2(w) - (1.0 - w) * std::log2(1.0 - w);
}
}  // namespace detail

/// Expected mixture entropy E[h(Z|i,j)] where the conditional law of Z is
/// weight1*N(i, var1) + (1-weight1)*N(j, var2) and the means i, j are
/// independent zero-mean Gaussians with variances signal_var1, signal_var2.
/// By translation invariance this reduces to one expectation over the mean
/// separation Delta ~ N(0, signal_var1 + signal_var2).
///
/// g(Delta) = h(mixture at separation Delta) saturates at the component
/// scale sigma1 + sigma2: beyond a few of those, h equals the weighted
/// component entropies plus the weight entropy exactly. A Hermite rule
/// samples mostly saturated values once Delta spreads wider than that scale
/// and misses the transition region entirely, so the expectation is taken as
/// a Gauss-Legendre core over the transition region plus the closed-form
/// saturated tail; the split is accurate across all scale ratios.
inline double expected_mixture_entropy(double weight1, double var1, double var2,
                                       double signal_var1, double signal_var2,
                                       double abs_tol = 1e-6, int points = 24) {
    if (!(signal_var1 >= 0.0) || !(signal_var2 >= 0.0))
        throw std::domain_error("signal variances must be non-negative");
    const double s2 = signal_var1 + signal_var2;
    if (s2 == 0.0)
        return mixture_diff_entropy({weight1, 0.0, 0.0, var1, var2}, abs_tol);
    const double s = std::sqrt(s2);
    const double sat_scale = std::sqrt(var1) + std::sqrt(var2);

    // g is even in Delta: integrate [0, T] and double via the density factor.
    const double t_edge = std::min(10.0 * s, 12.0 * sat_scale);
    static thread_local std::vector<std::pair<double, double>> gl;
    static thread_local int gl_order = 0;
    if (gl_order != points) {
        gl = gauss_legendre(points);
        gl_order = points;
    }
    double core = 0.0;
    for (const auto& [x, w] : gl) {
        const double delta = 0.5 * t_edge * (x + 1.0);
        const double phi = std::exp(-0.5 * delta * delta / s2) / (s * std::sqrt(2.0 * M_PI));
        core += w * phi * mixture_diff_entropy({weight1, 0.0, delta, var1, var2}, abs_tol);
    }
    core *= t_edge;  // 2 * (T/2): both half-lines, times the interval scaling
    const double g_sat = weight1 * gaussian_diff_entropy(var1) +
                         (1.0 - weight1) * gaussian_diff_entropy(var2) +
                         detail::weight_entropy(weight1);
    const double tail_mass = std::erfc(t_edge / (s * std::sqrt(2.0)));
    return core + g_sat * tail_mass;
}

}  // namespace wiretap
