#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wiretap/rng.hpp"

namespace wiretap {

/// Near-field placement: Alice at (-d_ab/2, 0), Bob at (+d_ab/2, 0), Eve on
/// the exclusion circle of radius r_e at angle theta from the x-axis.
struct GeometryConfig {
    double d_ab = 1.0;      // Alice-Bob distance, meters
    double r_e = 10.0;      // Eve exclusion radius, meters
    double theta = M_PI_2;  // Eve angle, radians
    double alpha_pl = 2.0;  // path-loss exponent
    double k_wave = 50.265482457436690;  // wave number, rad/m (2.4 GHz)
    double g_a = 1.0;
    double g_b = 1.0;
    double g_e = 1.0;
};

inline void validate(const GeometryConfig& g) {
    if (!(g.d_ab > 0.0)) throw std::domain_error("GeometryConfig: d_ab must be positive");
    if (!(g.r_e > 0.0)) throw std::domain_error("GeometryConfig: r_e must be positive");
    if (!(g.theta >= 0.0 && g.theta <= M_PI))
        throw std::domain_error("GeometryConfig: theta must be in [0, pi]");
    if (!(g.alpha_pl > 0.0)) throw std::domain_error("GeometryConfig: alpha_pl must be positive");
    if (!(g.k_wave >= 0.0)) throw std::domain_error("GeometryConfig: k_wave must be non-negative");
    if (!(g.g_a > 0.0 && g.g_b > 0.0 && g.g_e > 0.0))
        throw std::domain_error("GeometryConfig: gains must be positive");
}

struct EveDistances {
    double d_ae;
    double d_be;
};

/// Distances from Eve's position on the exclusion circle to Alice and Bob.
inline EveDistances place_eve(const GeometryConfig& g) {
    validate(g);
    const double ex = g.r_e * std::cos(g.theta);
    const double ey = g.r_e * std::sin(g.theta);
    const double half = 0.5 * g.d_ab;
    const EveDistances d{std::hypot(ex + half, ey), std::hypot(ex - half, ey)};
    if (d.d_ae <= 0.0 || d.d_be <= 0.0)
        throw std::domain_error("GeometryConfig: Eve coincides with a node");
    return d;
}

/// Randomized transmit-power law: SNR at unit distance drawn uniformly from
/// [rho_min, rho_max], either continuously or from discrete levels.
struct PowerPolicy {
    double rho_min = 1.0;
    double rho_max = 100.0;
    std::vector<double> levels;  // empty => continuous uniform

    bool continuous() const { return levels.empty(); }

    double sample(RandomStream& rng) const {
        if (continuous()) return rng.next_double(rho_min, rho_max);
        return levels[rng.next_index(levels.size())];
    }
};

inline void validate(const PowerPolicy& p) {
    if (!(p.rho_min > 0.0 && p.rho_min <= p.rho_max))
        throw std::domain_error("PowerPolicy: need 0 < rho_min <= rho_max");
    for (double v : p.levels)
        if (!(v >= p.rho_min && v <= p.rho_max))
            throw std::domain_error("PowerPolicy: discrete level outside [rho_min, rho_max]");
}

enum class TransmitEvent { alice_only, bob_only, both };

/// Received power at the noiseless eavesdropper for one symbol interval.
/// Amplitudes are sqrt(rho) d^{-alpha/2} with phases exp(-j k d); the receive
/// gain G_E normalizes out under the noiseless assumption.
inline double eve_received_power(TransmitEvent event, double rho_a, double rho_b, int s_a,
                                 int s_b, const GeometryConfig& geo) {
    const EveDistances d = place_eve(geo);
    switch (event) {
        case TransmitEvent::alice_only:
            return rho_a * std::pow(d.d_ae, -geo.alpha_pl);
        case TransmitEvent::bob_only:
            return rho_b * std::pow(d.d_be, -geo.alpha_pl);
        case TransmitEvent::both: {
            const double amp_a = std::sqrt(rho_a) * std::pow(d.d_ae, -0.5 * geo.alpha_pl);
            const double amp_b = std::sqrt(rho_b) * std::pow(d.d_be, -0.5 * geo.alpha_pl);
            const double phase = geo.k_wave * (d.d_ae - d.d_be);
            return amp_a * amp_a + amp_b * amp_b +
                   2.0 * amp_a * amp_b * s_a * s_b * std::cos(phase);
        }
    }
    return 0.0;
}

}  // namespace wiretap
