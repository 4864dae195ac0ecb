#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wiretap/info_theory.hpp"
#include "wiretap/region.hpp"

namespace wiretap {

/// Crossover probabilities of the modulo-2 channel at the two users and the
/// eavesdropper.
struct ModuloChannel {
    Probability eps1;
    Probability eps2;
    Probability eps_e;
};

/// Artificial prefix-noise probabilities injected by each transmitter.
struct ModuloPrefix {
    Probability ebar1;
    Probability ebar2;
};

/// Crossovers of the cascaded prefix + physical channels.
struct ModuloDerived {
    Probability ehat1;    // P(y1 != c2 | c2)
    Probability ehat2;    // P(y2 != c1 | c1)
    Probability ebar12;   // combined prefix noise seen by Eve
    Probability ehat_e;   // P(z != c1 xor c2 | c1, c2)
};

inline ModuloDerived derive_modulo(const ModuloChannel& ch, const ModuloPrefix& pre) {
    const Probability ebar12 = bsc_compose(pre.ebar1, pre.ebar2);
    return {bsc_compose(ch.eps1, pre.ebar2), bsc_compose(ch.eps2, pre.ebar1), ebar12,
            bsc_compose(ch.eps_e, ebar12)};
}

/// Gaussian two-way wiretap channel: power gains toward each receiver and
/// per-user power budgets. g11 and g22 do not enter the rate formulas (each
/// receiver knows its own transmitted signal) but are carried for
/// completeness.
struct GaussianChannel {
    double g11 = 1.0;
    double g22 = 1.0;
    double ge1 = 0.0;
    double ge2 = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
};

inline void validate(const GaussianChannel& ch) {
    for (double v : {ch.g11, ch.g22, ch.ge1, ch.ge2, ch.rho1, ch.rho2})
        if (!(v >= 0.0)) throw std::domain_error("GaussianChannel: negative field");
}

/// Split of each user's power between the codeword and the artificial noise.
struct PowerSplit {
    double rho1c = 0.0;
    double rho1n = 0.0;
    double rho2c = 0.0;
    double rho2n = 0.0;
};

inline void validate(const PowerSplit& sp, const GaussianChannel& ch) {
    for (double v : {sp.rho1c, sp.rho1n, sp.rho2c, sp.rho2n})
        if (!(v >= 0.0)) throw std::domain_error("PowerSplit: negative power");
    const double slack = 1e-9;
    if (sp.rho1c + sp.rho1n > ch.rho1 * (1.0 + slack) + slack ||
        sp.rho2c + sp.rho2n > ch.rho2 * (1.0 + slack) + slack)
        throw std::domain_error("PowerSplit: exceeds power budget");
}

/// Full-duplex modulo-2 bounds for one prefix choice:
/// a = 1 - H(ehat2), b = 1 - H(ehat1), c = 1 + H(ehat_e) - H(ehat1) - H(ehat2).
inline RateBounds fm_bounds(const ModuloChannel& ch, const ModuloPrefix& pre) {
    const ModuloDerived d = derive_modulo(ch, pre);
    const double h1 = binary_entropy(d.ehat1);
    const double h2 = binary_entropy(d.ehat2);
    const double he = binary_entropy(d.ehat_e);
    return {1.0 - h2, 1.0 - h1, 1.0 + he - h1 - h2};
}

/// Corner points (1 - H(eps1), 0) and (0, 1 - H(eps2)) of the secrecy
/// capacity region.
inline std::pair<RatePoint, RatePoint> fm_corner_points(const ModuloChannel& ch) {
    return {RatePoint{1.0 - binary_entropy(ch.eps1), 0.0},
            RatePoint{0.0, 1.0 - binary_entropy(ch.eps2)}};
}

/// Full-duplex modulo-2 achievable region: hull over the prefix grid, plus
/// the analytic corner points (which are not grid-limited).
inline RateRegion fm_region(const ModuloChannel& ch, double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 0.5))
        throw std::invalid_argument("fm_region: grid_step must be in (0, 0.5]");
    const int n = static_cast<int>(std::lround(1.0 / grid_step));
    HullAccumulator acc;
    for (int i = 0; i <= n; ++i) {
        const double e1 = std::min(1.0, i * grid_step);
        for (int j = 0; j <= n; ++j) {
            const double e2 = std::min(1.0, j * grid_step);
            acc.add_bounds(fm_bounds(ch, {e1, e2}));
        }
    }
    const auto [c1, c2] = fm_corner_points(ch);
    acc.add(c1);
    acc.add(c2);
    return acc.finish();
}

/// The binning + key-sharing-only comparison: Corollary 1 restricted to no
/// channel prefixing.
inline RateRegion fm_no_prefix_region(const ModuloChannel& ch) {
    return pentagon(fm_bounds(ch, {0.0, 0.0}));
}

/// Full-duplex Gaussian bounds for one power split.
inline RateBounds fg_bounds(const GaussianChannel& ch, const PowerSplit& sp) {
    validate(ch);
    validate(sp, ch);
    const double a = gamma_rate(sp.rho1c / (1.0 + sp.rho1n));
    const double b = gamma_rate(sp.rho2c / (1.0 + sp.rho2n));
    const double eve = gamma_rate((sp.rho1c * ch.ge1 + sp.rho2c * ch.ge2) /
                                  (1.0 + sp.rho1n * ch.ge1 + sp.rho2n * ch.ge2));
    return {a, b, a + b - eve};
}

/// Which split configurations a user may sweep.
enum class SplitMode {
    full,           // any (codeword, noise) split of any fraction of the budget
    codeword_only,  // binning without prefixing: all used power on the codeword
    noise_only,     // pure jamming: all used power on the artificial noise
};

struct FgSweep {
    int budget_count = 50;    // grid points for the fraction of budget used
    int codeword_count = 50;  // grid points for the codeword fraction of that
    SplitMode mode1 = SplitMode::full;
    SplitMode mode2 = SplitMode::full;
};

namespace detail {

inline std::vector<std::pair<double, double>> split_grid(double rho, SplitMode mode,
                                                         const FgSweep& sweep) {
    std::vector<std::pair<double, double>> out;
    const int nt = std::max(2, sweep.budget_count);
    const int ns = std::max(2, sweep.codeword_count);
    for (int i = 0; i < nt; ++i) {
        const double used = rho * i / (nt - 1);
        switch (mode) {
            case SplitMode::codeword_only:
                out.push_back({used, 0.0});
                break;
            case SplitMode::noise_only:
                out.push_back({0.0, used});
                break;
            case SplitMode::full:
                for (int j = 0; j < ns; ++j) {
                    const double s = static_cast<double>(j) / (ns - 1);
                    out.push_back({used * s, used * (1.0 - s)});
                }
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Full-duplex Gaussian achievable region: hull over the power-split sweep.
inline RateRegion fg_region(const GaussianChannel& ch, const FgSweep& sweep = {}) {
    validate(ch);
    const auto splits1 = detail::split_grid(ch.rho1, sweep.mode1, sweep);
    const auto splits2 = detail::split_grid(ch.rho2, sweep.mode2, sweep);
    HullAccumulator acc;
    for (const auto& [c1, n1] : splits1) {
        const double a = gamma_rate(c1 / (1.0 + n1));
        for (const auto& [c2, n2] : splits2) {
            const double b = gamma_rate(c2 / (1.0 + n2));
            const double eve = gamma_rate((c1 * ch.ge1 + c2 * ch.ge2) /
                                          (1.0 + n1 * ch.ge1 + n2 * ch.ge2));
            acc.add_bounds({a, b, a + b - eve});
        }
    }
    return acc.finish();
}

namespace detail {

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

/// One-dimensional grid maximum of f over [step, 1] (the alpha -> 0 limit is
/// taken by continuity, so the grid starts one step in).
template <typename F>
std::pair<double, double> grid_max_alpha(const F& f, double step) {
    double best = 0.0, best_alpha = 0.0;
    const int n = static_cast<int>(std::lround(1.0 / step));
    for (int i = 1; i <= n; ++i) {
        const double alpha = std::min(1.0, i * step);
        const double v = f(alpha);
        if (v > best) {
            best = v;
            best_alpha = alpha;
        }
    }
    return {best, best_alpha};
}

inline double he_yener_rate(double rho_own, double rho_other, double ge_own, double ge_other,
                            double alpha_step) {
    const double key = pos(gamma_rate(rho_other) -
                           gamma_rate(ge_other * rho_other / (1.0 + ge_own * rho_own)));
    const auto f = [&](double alpha) {
        const double inner =
            pos(gamma_rate(ge_own * rho_own / (1.0 + ge_other * rho_other)) -
                (1.0 - alpha) / alpha * key);
        return alpha * pos(gamma_rate(rho_own) - inner);
    };
    return grid_max_alpha(f, alpha_step).first;
}

inline double backward_key_rate(double rho_own, double rho_other, double ge_own,
                                double ge_other, double alpha_step) {
    const double key = pos(gamma_rate(rho_other) -
                           gamma_rate(ge_other * rho_other / (1.0 + ge_own * rho_own)));
    const auto f = [&](double alpha) {
        return std::min(alpha * gamma_rate(rho_own), (1.0 - alpha) * key);
    };
    return grid_max_alpha(f, alpha_step).first;
}

}  // namespace detail

/// Comparison region of He and Yener: hull of (0,0), (R1*,0), (0,R2*), the
/// extreme rates maximized over the time-sharing fraction alpha.
inline RateRegion he_yener_region(const GaussianChannel& ch, double alpha_step = 1e-4) {
    validate(ch);
    if (!(alpha_step > 0.0 && alpha_step <= 0.5))
        throw std::invalid_argument("he_yener_region: alpha_step must be in (0, 0.5]");
    const double r1 = detail::he_yener_rate(ch.rho1, ch.rho2, ch.ge1, ch.ge2, alpha_step);
    const double r2 = detail::he_yener_rate(ch.rho2, ch.rho1, ch.ge2, ch.ge1, alpha_step);
    return convex_hull({{0.0, 0.0}, {r1, 0.0}, {0.0, r2}});
}

/// Comparison region achieved by backward key sharing only (one-time pad in a
/// time-division schedule).
inline RateRegion backward_key_region(const GaussianChannel& ch, double alpha_step = 1e-4) {
    validate(ch);
    if (!(alpha_step > 0.0 && alpha_step <= 0.5))
        throw std::invalid_argument("backward_key_region: alpha_step must be in (0, 0.5]");
    const double r1 = detail::backward_key_rate(ch.rho1, ch.rho2, ch.ge1, ch.ge2, alpha_step);
    const double r2 = detail::backward_key_rate(ch.rho2, ch.rho1, ch.ge2, ch.ge1, alpha_step);
    return convex_hull({{0.0, 0.0}, {r1, 0.0}, {0.0, r2}});
}

}  // namespace wiretap
