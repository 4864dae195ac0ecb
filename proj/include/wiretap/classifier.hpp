#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wiretap/geometry.hpp"
#include "wiretap/rng.hpp"

namespace wiretap {

/// Support of the received-power distribution of one transmission scenario,
/// as seen by the noiseless eavesdropper. Continuous single-source scenarios
/// have closed-form intervals; everything else is estimated by Monte Carlo
/// histogram. Classification only needs feasibility: the paper's energy
/// classifier matches the observed power against the scenarios that could
/// have produced it and picks uniformly among them.
struct PowerSupport {
    enum class Kind { interval, atoms, histogram };
    Kind kind = Kind::interval;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> atoms;        // sorted, for discrete single-source
    std::vector<std::uint32_t> bins;  // histogram counts over [lo, hi]

    bool feasible(double z) const {
        switch (kind) {
            case Kind::interval:
                return z >= lo && z <= hi;
            case Kind::atoms: {
                auto it = std::lower_bound(atoms.begin(), atoms.end(), z - atom_tol(z));
                return it != atoms.end() && *it <= z + atom_tol(z);
            }
            case Kind::histogram: {
                if (z < lo || z > hi || bins.empty()) return false;
                const double w = (hi - lo) / bins.size();
                std::size_t i = w > 0.0 ? static_cast<std::size_t>((z - lo) / w) : 0;
                if (i >= bins.size()) i = bins.size() - 1;
                return bins[i] > 0;
            }
        }
        return false;
    }

private:
    static double atom_tol(double z) { return 1e-9 * (1.0 + std::abs(z)); }
};

namespace detail {

inline PowerSupport single_source_support(const PowerPolicy& policy, double dist,
                                          double alpha_pl) {
    const double atten = std::pow(dist, -alpha_pl);
    PowerSupport s;
    if (policy.continuous()) {
        s.kind = PowerSupport::Kind::interval;
        s.lo = policy.rho_min * atten;
        s.hi = policy.rho_max * atten;
    } else {
        s.kind = PowerSupport::Kind::atoms;
        for (double level : policy.levels) s.atoms.push_back(level * atten);
        std::sort(s.atoms.begin(), s.atoms.end());
    }
    return s;
}

template <typename SampleFn>
PowerSupport histogram_support(SampleFn&& sample, long trials, int bin_count) {
    std::vector<double> zs(trials);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (long t = 0; t < trials; ++t) {
        zs[t] = sample();
        lo = std::min(lo, zs[t]);
        hi = std::max(hi, zs[t]);
    }
    PowerSupport s;
    s.kind = PowerSupport::Kind::histogram;
    s.lo = lo;
    s.hi = hi;
    s.bins.assign(bin_count, 0);
    const double w = (hi - lo) / bin_count;
    for (double z : zs) {
        std::size_t i = w > 0.0 ? static_cast<std::size_t>((z - lo) / w) : 0;
        if (i >= s.bins.size()) i = s.bins.size() - 1;
        ++s.bins[i];
    }
    return s;
}

/// Concurrent-transmission power at Eve for given unit-distance SNRs,
/// symbols, and geometry-fixed attenuation/phase.
struct ConcurrentModel {
    double atten_a, atten_b;  // d^{-alpha}
    double phase_cos;         // cos(k (d_ae - d_be))

    double power(double rho_a, double rho_b, int s_a, int s_b) const {
        const double pa = rho_a * atten_a, pb = rho_b * atten_b;
        return pa + pb + 2.0 * std::sqrt(pa * pb) * s_a * s_b * phase_cos;
    }
};

inline ConcurrentModel concurrent_model(const GeometryConfig& geo) {
    const EveDistances d = place_eve(geo);
    return {std::pow(d.d_ae, -geo.alpha_pl), std::pow(d.d_be, -geo.alpha_pl),
            std::cos(geo.k_wave * (d.d_ae - d.d_be))};
}

}  // namespace detail

constexpr long kMinClassifierTrials = 10000;

/// Trained scenario model for the TDM protocol: Alice's clean data symbols
/// versus symbols jammed by Bob's random feedback.
struct TdmClassifier {
    PowerSupport clean;
    PowerSupport jammed;
    bool undertrained = false;
};

/// Trained scenario model for the two-way protocol.
struct TwoWayClassifier {
    PowerSupport alice;
    PowerSupport bob;
    PowerSupport both;
    bool undertrained = false;
};

inline TdmClassifier train_tdm_classifier(const GeometryConfig& geo,
                                          const PowerPolicy& policy_data,
                                          const PowerPolicy& policy_feedback, long trials,
                                          std::uint64_t seed, int bin_count = 2048) {
    validate(geo);
    validate(policy_data);
    validate(policy_feedback);
    if (trials < 1) throw std::invalid_argument("train_tdm_classifier: trials must be >= 1");
    const EveDistances d = place_eve(geo);
    const auto model = detail::concurrent_model(geo);
    TdmClassifier c;
    c.undertrained = trials < kMinClassifierTrials;
    c.clean = detail::single_source_support(policy_data, d.d_ae, geo.alpha_pl);
    RandomStream rng = RandomStream::derive(seed, 0xc1a551f1);
    c.jammed = detail::histogram_support(
        [&] {
            return model.power(policy_data.sample(rng), policy_feedback.sample(rng),
                               rng.next_symbol(), rng.next_symbol());
        },
        trials, bin_count);
    return c;
}

inline TwoWayClassifier train_twoway_classifier(const GeometryConfig& geo,
                                                const PowerPolicy& policy, long trials,
                                                std::uint64_t seed, int bin_count = 2048) {
    validate(geo);
    validate(policy);
    if (trials < 1) throw std::invalid_argument("train_twoway_classifier: trials must be >= 1");
    const EveDistances d = place_eve(geo);
    const auto model = detail::concurrent_model(geo);
    TwoWayClassifier c;
    c.undertrained = trials < kMinClassifierTrials;
    c.alice = detail::single_source_support(policy, d.d_ae, geo.alpha_pl);
    c.bob = detail::single_source_support(policy, d.d_be, geo.alpha_pl);
    RandomStream rng = RandomStream::derive(seed, 0xc1a551f2);
    c.both = detail::histogram_support(
        [&] {
            return model.power(policy.sample(rng), policy.sample(rng), rng.next_symbol(),
                               rng.next_symbol());
        },
        trials, bin_count);
    return c;
}

/// Classified-scenario indices for the two-way model.
enum class TwoWayLabel { alice = 0, bob = 1, both = 2 };

/// Uniform choice among the scenarios whose support contains z; a fair coin
/// among all allowed labels when none is feasible (the observation carries no
/// usable information then).
inline TwoWayLabel classify_twoway(const TwoWayClassifier& c, double z, bool allow_both,
                                   RandomStream& rng) {
    TwoWayLabel feas[3];
    int n = 0;
    if (c.alice.feasible(z)) feas[n++] = TwoWayLabel::alice;
    if (c.bob.feasible(z)) feas[n++] = TwoWayLabel::bob;
    if (allow_both && c.both.feasible(z)) feas[n++] = TwoWayLabel::both;
    if (n == 0) {
        const int total = allow_both ? 3 : 2;
        return static_cast<TwoWayLabel>(rng.next_index(total));
    }
    return feas[n == 1 ? 0 : rng.next_index(n)];
}

/// True iff z is classified as jammed under the TDM model.
inline bool classify_tdm_jammed(const TdmClassifier& c, double z, RandomStream& rng) {
    const bool fc = c.clean.feasible(z);
    const bool fj = c.jammed.feasible(z);
    if (fc == fj) return rng.next_bernoulli(0.5);
    return fj;
}

}  // namespace wiretap
