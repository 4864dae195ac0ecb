#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "wiretap/full_duplex.hpp"
#include "wiretap/info_theory.hpp"
#include "wiretap/mixture_entropy.hpp"
#include "wiretap/region.hpp"

namespace wiretap {

/// Per-symbol transmit-activation probabilities of the two users.
struct SchedulingProbs {
    Probability p1;
    Probability p2;
};

/// Time shares of the two single-user states in deterministic scheduling.
struct DeterministicShares {
    Probability ps1;
    Probability ps2;
};

inline void validate(const DeterministicShares& s) {
    if (std::abs(s.ps1.value() + s.ps2.value() - 1.0) > 1e-12)
        throw std::domain_error("DeterministicShares: shares must sum to 1");
}

/// Parameter tuple of the randomized-scheduling modulo-2 region.
struct HalfDuplexModuloParams {
    ModuloPrefix prefix;
    Probability mu1;  // P(C1 = 1)
    Probability mu2;  // P(C2 = 1)
    SchedulingProbs sched;
};

/// Derived one-probabilities and crossovers for the half-duplex modulo-2
/// channel, together with the single-transmission state weights d1, d2.
struct HalfDuplexModuloDerived {
    Probability eps_e1, eps_e2;   // Eve crossovers in single-user states
    Probability ehat_e;           // Eve crossover, concurrent state
    Probability ehat1, ehat2;     // legitimate crossovers
    Probability muhat1, muhat2;   // output one-probabilities at users
    Probability mu_e1, mu_e2;     // Eve output one-probabilities, single states
    Probability muhat_e;          // Eve output one-probability, concurrent
    Probability mu12;
    Probability d1, d2;
};

inline HalfDuplexModuloDerived derive_half_duplex(const ModuloChannel& ch,
                                                  const HalfDuplexModuloParams& p) {
    const Probability eps_e1 = bsc_compose(ch.eps_e, p.prefix.ebar1);
    const Probability eps_e2 = bsc_compose(ch.eps_e, p.prefix.ebar2);
    const ModuloDerived fd = derive_modulo(ch, p.prefix);
    const Probability mu12 = bsc_compose(p.mu1, p.mu2);
    const double p1 = p.sched.p1, p2 = p.sched.p2;
    const double w1 = p1 * (1.0 - p2), w2 = p2 * (1.0 - p1);
    // When both single-transmission probabilities vanish the d-split is
    // undefined but also weightless; 0.5 keeps the struct well formed.
    const double d1 = (w1 + w2) > 0.0 ? w1 / (w1 + w2) : 0.5;
    return {eps_e1,
            eps_e2,
            fd.ehat_e,
            fd.ehat1,
            fd.ehat2,
            bsc_compose(fd.ehat1, p.mu2),
            bsc_compose(fd.ehat2, p.mu1),
            bsc_compose(eps_e1, p.mu1),
            bsc_compose(eps_e2, p.mu2),
            bsc_compose(fd.ehat_e, mu12),
            mu12,
            d1,
            1.0 - d1};
}

/// Randomized-scheduling modulo-2 bounds for one parameter tuple.
inline RateBounds hm_bounds(const ModuloChannel& ch, const HalfDuplexModuloParams& p) {
    const HalfDuplexModuloDerived d = derive_half_duplex(ch, p);
    const double p1 = p.sched.p1, p2 = p.sched.p2;
    const double w1 = p1 * (1.0 - p2), w2 = p2 * (1.0 - p1);
    const double a = w1 * (binary_entropy(d.muhat2) - binary_entropy(d.ehat2));
    const double b = w2 * (binary_entropy(d.muhat1) - binary_entropy(d.ehat1));
    const double concurrent =
        p1 * p2 * (binary_entropy(d.muhat_e) - binary_entropy(d.ehat_e));
    double single = 0.0;
    if (w1 + w2 > 0.0) {
        const double mix_out = binary_entropy(d.mu_e1 * d.d1 + d.mu_e2 * d.d2);
        const double mix_in0 = binary_entropy(d.d1 * d.eps_e1 + d.d2 * d.eps_e2);
        const double mix_in1 =
            binary_entropy(d.d1 * (1.0 - d.eps_e1) + d.d2 * d.eps_e2);
        single = (w1 + w2) * (mix_out - 0.5 * mix_in0 - 0.5 * mix_in1);
    }
    return {a, b, a + b - concurrent - single};
}

struct HmSweep {
    double prob_step = 0.05;   // prefix and input one-probability grids
    double sched_step = 0.05;  // transmit-probability grids
};

/// Randomized-scheduling modulo-2 region: hull over the six-parameter grid.
inline RateRegion hm_region(const ModuloChannel& ch, const HmSweep& sweep = {}) {
    if (!(sweep.prob_step > 0.0 && sweep.prob_step <= 0.5) ||
        !(sweep.sched_step > 0.0 && sweep.sched_step <= 0.5))
        throw std::invalid_argument("hm_region: steps must be in (0, 0.5]");
    const auto grid = [](double step) {
        std::vector<double> g;
        const int n = static_cast<int>(std::lround(1.0 / step));
        for (int i = 0; i <= n; ++i) g.push_back(std::min(1.0, i * step));
        return g;
    };
    // The joint flip (ebar_i, mu_i) -> (1-ebar_i, 1-mu_i) leaves every bound
    // term unchanged, so the prefix grids only need [0, 0.5] as long as the
    // input probabilities sweep the full range.
    std::vector<double> prefixes;
    for (double v : grid(sweep.prob_step))
        if (v <= 0.5 + 1e-12) prefixes.push_back(v);
    const std::vector<double> inputs = grid(sweep.prob_step);
    const std::vector<double> scheds = grid(sweep.sched_step);

    HullAccumulator acc(1u << 21);
    for (double e1 : prefixes)
        for (double e2 : prefixes)
            for (double m1 : inputs)
                for (double m2 : inputs) {
                    const ModuloPrefix pre{e1, e2};
                    // Everything not involving P1, P2 is fixed here.
                    const HalfDuplexModuloParams base{pre, m1, m2, {0.5, 0.5}};
                    const HalfDuplexModuloDerived d = derive_half_duplex(ch, base);
                    const double ka =
                        binary_entropy(d.muhat2) - binary_entropy(d.ehat2);
                    const double kb =
                        binary_entropy(d.muhat1) - binary_entropy(d.ehat1);
                    const double kc =
                        binary_entropy(d.muhat_e) - binary_entropy(d.ehat_e);
                    for (double p1 : scheds)
                        for (double p2 : scheds) {
                            const double w1 = p1 * (1.0 - p2), w2 = p2 * (1.0 - p1);
                            const double a = w1 * ka, b = w2 * kb;
                            double c = a + b - p1 * p2 * kc;
                            if (w1 + w2 > 0.0) {
                                const double d1 = w1 / (w1 + w2), d2 = 1.0 - d1;
                                const double mix_out = binary_entropy(
                                    d.mu_e1 * d1 + d.mu_e2 * d2);
                                const double mix_in0 = binary_entropy(
                                    d1 * d.eps_e1 + d2 * d.eps_e2);
                                const double mix_in1 = binary_entropy(
                                    d1 * (1.0 - d.eps_e1) + d2 * d.eps_e2);
                                c -= (w1 + w2) *
                                     (mix_out - 0.5 * mix_in0 - 0.5 * mix_in1);
                            }
                            acc.add_bounds({a, b, c});
                        }
                }
    return acc.finish();
}

/// Deterministic-scheduling modulo-2 bounds (states 3 and 4 carry no rate).
inline RateBounds hd_deterministic_bounds(const ModuloChannel& ch, const ModuloPrefix& prefix,
                                          Probability mu1, Probability mu2,
                                          const DeterministicShares& shares) {
    validate(shares);
    const HalfDuplexModuloParams p{prefix, mu1, mu2, {0.5, 0.5}};
    const HalfDuplexModuloDerived d = derive_half_duplex(ch, p);
    const double i1 = binary_entropy(d.muhat2) - binary_entropy(d.ehat2);
    const double i2 = binary_entropy(d.muhat1) - binary_entropy(d.ehat1);
    const double z1 = binary_entropy(d.mu_e1) - binary_entropy(d.eps_e1);
    const double z2 = binary_entropy(d.mu_e2) - binary_entropy(d.eps_e2);
    const double a = shares.ps1 * i1;
    const double b = shares.ps2 * i2;
    const double c =
        shares.ps1 * std::max(i1 - z1, 0.0) + shares.ps2 * std::max(i2 - z2, 0.0);
    return {a, b, c};
}

/// Half-duplex Gaussian parameters: power split, scheduling probabilities and
/// the common Eve-referred total power rho_r = (rho_i^c + rho_i^n) g_ei.
struct HalfDuplexGaussianParams {
    PowerSplit split;
    SchedulingProbs sched;
    double rho_r = 0.0;
};

inline void validate(const HalfDuplexGaussianParams& p, const GaussianChannel& ch) {
    const double tol = 1e-9;
    const double t1 = (p.split.rho1c + p.split.rho1n) * ch.ge1;
    const double t2 = (p.split.rho2c + p.split.rho2n) * ch.ge2;
    if (std::abs(t1 - p.rho_r) > tol * std::max(1.0, p.rho_r) ||
        std::abs(t2 - p.rho_r) > tol * std::max(1.0, p.rho_r))
        throw std::domain_error("HalfDuplexGaussianParams: rho_r equalization violated");
    if (p.sched.p1 * (p.split.rho1c + p.split.rho1n) > ch.rho1 + tol ||
        p.sched.p2 * (p.split.rho2c + p.split.rho2n) > ch.rho2 + tol)
        throw std::domain_error("HalfDuplexGaussianParams: average power constraint violated");
}

namespace detail {

/// The per-symbol eavesdropper information in the pooled single-transmission
/// states: h(Z) - E[h(Z|i,j)] with h(Z) = 0.5 log2(2 pi e (1 + rho_r)).
inline double single_state_penalty(double d1, double v1, double v2, double signal_var1,
                                   double signal_var2, double rho_r) {
    const double hz = 0.5 * std::log2(2.0 * M_PI * M_E * (1.0 + rho_r));
    const double cond = expected_mixture_entropy(d1, v1, v2, signal_var1, signal_var2);
    return hz - cond;
}

}  // namespace detail

/// Randomized-scheduling Gaussian bounds for one parameter tuple.
/// Throws if the rho_r equalization or average-power constraints fail;
/// quadrature errors propagate.
inline RateBounds hg_bounds(const GaussianChannel& ch, const HalfDuplexGaussianParams& p) {
    validate(ch);
    validate(p, ch);
    const double p1 = p.sched.p1, p2 = p.sched.p2;
    const double w1 = p1 * (1.0 - p2), w2 = p2 * (1.0 - p1);
    const double a = w1 * gamma_rate(p.split.rho1c / (1.0 + p.split.rho1n));
    const double b = w2 * gamma_rate(p.split.rho2c / (1.0 + p.split.rho2n));
    const double concurrent =
        p1 * p2 *
        gamma_rate((p.split.rho1c * ch.ge1 + p.split.rho2c * ch.ge2) /
                   (1.0 + p.split.rho1n * ch.ge1 + p.split.rho2n * ch.ge2));
    double single = 0.0;
    if (w1 + w2 > 0.0) {
        const double d1 = w1 / (w1 + w2);
        single = (w1 + w2) * detail::single_state_penalty(
                                 d1, 1.0 + p.split.rho1n * ch.ge1,
                                 1.0 + p.split.rho2n * ch.ge2, p.split.rho1c * ch.ge1,
                                 p.split.rho2c * ch.ge2, p.rho_r);
    }
    return {a, b, a + b - concurrent - single};
}

struct HgSweep {
    int rho_r_count = 8;   // Eve-referred power levels
    int split_count = 10;  // codeword fraction per user
    int sched_count = 10;  // transmit-probability grid per user
    double rho_r_max_scale = 2.0;  // sweep rho_r up to this times max(rho_i g_ei)
};

/// Randomized-scheduling Gaussian region: hull over (rho_r, splits, P1, P2)
/// with the rho_r equalization enforced by construction. Expected mixture
/// entropies are cached on (d1, variances, signal-variance sum) since the
/// sweep revisits identical integrals many times.
inline RateRegion hg_region(const GaussianChannel& ch, const HgSweep& sweep = {}) {
    validate(ch);
    if (ch.ge1 <= 0.0 || ch.ge2 <= 0.0)
        throw std::invalid_argument(
            "hg_region: rho_r equalization needs positive eavesdropper gains");
    if (sweep.rho_r_count < 1 || sweep.split_count < 2 || sweep.sched_count < 1)
        throw std::invalid_argument("hg_region: sweep counts too small");
    const double rho_r_hi =
        sweep.rho_r_max_scale * std::max(ch.rho1 * ch.ge1, ch.rho2 * ch.ge2);
    if (!(rho_r_hi > 0.0)) return pentagon({0.0, 0.0, 0.0});

    struct KeyHash {
        std::size_t operator()(const std::array<double, 4>& k) const {
            std::uint64_t h = 1469598103934665603ull;
            for (double v : k) {
                std::uint64_t bits;
                std::memcpy(&bits, &v, sizeof bits);
                h = (h ^ bits) * 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_map<std::array<double, 4>, double, KeyHash> cache;

    HullAccumulator acc;
    for (int ir = 1; ir <= sweep.rho_r_count; ++ir) {
        const double rho_r = rho_r_hi * ir / sweep.rho_r_count;
        const double tot1 = rho_r / ch.ge1, tot2 = rho_r / ch.ge2;
        const double p1_max = std::min(1.0, ch.rho1 / tot1);
        const double p2_max = std::min(1.0, ch.rho2 / tot2);
        for (int is1 = 0; is1 < sweep.split_count; ++is1) {
            const double s1 = static_cast<double>(is1) / (sweep.split_count - 1);
            for (int is2 = 0; is2 < sweep.split_count; ++is2) {
                const double s2 = static_cast<double>(is2) / (sweep.split_count - 1);
                const PowerSplit sp{s1 * tot1, (1.0 - s1) * tot1, s2 * tot2,
                                    (1.0 - s2) * tot2};
                const double ra = gamma_rate(sp.rho1c / (1.0 + sp.rho1n));
                const double rb = gamma_rate(sp.rho2c / (1.0 + sp.rho2n));
                const double kc = gamma_rate((sp.rho1c * ch.ge1 + sp.rho2c * ch.ge2) /
                                             (1.0 + sp.rho1n * ch.ge1 +
                                              sp.rho2n * ch.ge2));
                const double v1 = 1.0 + sp.rho1n * ch.ge1;
                const double v2 = 1.0 + sp.rho2n * ch.ge2;
                const double sv1 = sp.rho1c * ch.ge1, sv2 = sp.rho2c * ch.ge2;
                const double hz = 0.5 * std::log2(2.0 * M_PI * M_E * (1.0 + rho_r));
                for (int ip1 = 0; ip1 <= sweep.sched_count; ++ip1) {
                    const double p1 = p1_max * ip1 / sweep.sched_count;
                    for (int ip2 = 0; ip2 <= sweep.sched_count; ++ip2) {
                        const double p2 = p2_max * ip2 / sweep.sched_count;
                        const double w1 = p1 * (1.0 - p2), w2 = p2 * (1.0 - p1);
                        const double a = w1 * ra, b = w2 * rb;
                        double c = a + b - p1 * p2 * kc;
                        if (w1 + w2 > 0.0) {
                            const double d1 = w1 / (w1 + w2);
                            const std::array<double, 4> key{d1, v1, v2, sv1 + sv2};
                            auto it = cache.find(key);
                            if (it == cache.end())
                                it = cache
                                         .emplace(key, expected_mixture_entropy(
                                                           d1, v1, v2, sv1, sv2))
                                         .first;
                            c -= (w1 + w2) * (hz - it->second);
                        }
                        acc.add_bounds({a, b, c});
                    }
                }
            }
        }
    }
    return acc.finish();
}

}  // namespace wiretap
