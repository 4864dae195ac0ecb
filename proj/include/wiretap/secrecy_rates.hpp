#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiretap/classifier.hpp"
#include "wiretap/geometry.hpp"
#include "wiretap/info_theory.hpp"

namespace wiretap {

/// Estimated energy-classifier statistics for the TDM protocol.
struct TdmClassifierStats {
    double p_m = 0.0;          // jammed symbol classified clean
    double p_f = 0.0;          // clean symbol classified jammed
    double p_e_given_m = 0.0;  // decoding error given a miss
};

/// Estimated classification matrix for the two-way protocol. Rows index the
/// true event, columns the classified event, both ordered
/// (A,B^c), (A^c,B), (A,B); each row sums to 1.
struct TwoWayClassifierStats {
    double p[3][3] = {{0.0}};
    double p_e_ab_to_a = 0.0;  // decode error vs Alice given (A,B) -> (A,B^c)
    double p_e_ab_to_b = 0.0;  // decode error vs Bob given (A,B) -> (A^c,B)
};

/// The six single-classification misclassification/classification
/// probabilities of the no-erasure classifier, in the order used by the
/// two-way rate formulas. Helper for tests and audit output.
inline std::vector<double> six_single_probs(const TwoWayClassifierStats& s) {
    return {s.p[0][0], s.p[0][1], s.p[1][0], s.p[1][1], s.p[2][0], s.p[2][1]};
}

enum class TdmVariant { ml, pin_clean };
enum class TwoWayVariant { ml_binary, ml_full, pin_alice, pin_bob };

inline const char* name(TdmVariant v) {
    return v == TdmVariant::ml ? "ml" : "pin-clean";
}
inline const char* name(TwoWayVariant v) {
    switch (v) {
        case TwoWayVariant::ml_binary: return "ml-binary";
        case TwoWayVariant::ml_full: return "ml-full";
        case TwoWayVariant::pin_alice: return "pin-alice";
        case TwoWayVariant::pin_bob: return "pin-bob";
    }
    return "?";
}

/// Raw Monte Carlo estimates for one geometry, from which every classifier
/// variant's statistics derive.
struct TdmEstimates {
    TdmClassifierStats ml;
    double err_jammed = 0.0;  // unconditional stronger-symbol decode error, jammed symbols
    long trials_per_event = 0;
};

struct TwoWayEstimates {
    TwoWayClassifierStats ml_binary;
    TwoWayClassifierStats ml_full;
    double err_ab_alice = 0.0;  // unconditional decode error vs Alice, concurrent symbols
    double err_ab_bob = 0.0;
    long trials_per_event = 0;
};

namespace detail {

/// Eve decodes a concurrent symbol as the one received with higher power;
/// ties fall to a fair coin. Returns the decoded +/-1 value.
inline int stronger_symbol(double pa, double pb, int s_a, int s_b, RandomStream& rng) {
    if (pa > pb) return s_a;
    if (pb > pa) return s_b;
    return rng.next_bernoulli(0.5) ? s_a : s_b;
}

}  // namespace detail

/// Monte Carlo estimation of the TDM classifier statistics. The estimates are
/// conditional on the true event, so they do not depend on the feedback
/// probability beta. Identical seed gives identical stats.
inline TdmEstimates estimate_tdm(const GeometryConfig& geo, const PowerPolicy& policy_data,
                                 const PowerPolicy& policy_feedback, const TdmClassifier& cls,
                                 long trials, std::uint64_t seed) {
    validate(geo);
    validate(policy_data);
    validate(policy_feedback);
    if (trials < 2) throw std::invalid_argument("estimate_tdm: trials must be >= 2");
    const auto model = detail::concurrent_model(geo);
    const long n = trials / 2;
    RandomStream rng = RandomStream::derive(seed, 0xe5717a7e);

    long miss = 0, miss_err = 0, unconditional_err = 0, false_alarm = 0;
    for (long t = 0; t < n; ++t) {
        // Jammed symbol: Alice data plus Bob feedback.
        const double rho_a = policy_data.sample(rng);
        const double rho_b = policy_feedback.sample(rng);
        const int s_a = rng.next_symbol(), s_b = rng.next_symbol();
        const double z = model.power(rho_a, rho_b, s_a, s_b);
        const int decoded = detail::stronger_symbol(rho_a * model.atten_a,
                                                    rho_b * model.atten_b, s_a, s_b, rng);
        if (decoded != s_a) ++unconditional_err;
        if (!classify_tdm_jammed(cls, z, rng)) {
            ++miss;
            if (decoded != s_a) ++miss_err;
        }
    }
    for (long t = 0; t < n; ++t) {
        // Clean symbol: Alice alone.
        const double z = policy_data.sample(rng) * model.atten_a;
        if (classify_tdm_jammed(cls, z, rng)) ++false_alarm;
    }
    TdmEstimates out;
    out.trials_per_event = n;
    out.ml.p_m = static_cast<double>(miss) / n;
    out.ml.p_f = static_cast<double>(false_alarm) / n;
    out.ml.p_e_given_m = miss > 0 ? static_cast<double>(miss_err) / miss : 0.0;
    out.err_jammed = static_cast<double>(unconditional_err) / n;
    return out;
}

inline TdmClassifierStats tdm_variant_stats(const TdmEstimates& est, TdmVariant v) {
    switch (v) {
        case TdmVariant::ml:
            return est.ml;
        case TdmVariant::pin_clean:
            // Eve erases nothing: every jammed symbol is kept and decoded.
            return {1.0, 0.0, est.err_jammed};
    }
    return est.ml;
}

/// Spec-shaped wrapper: estimates for one classifier variant. beta is
/// accepted for interface symmetry and validated; the statistics themselves
/// are event-conditional.
inline TdmClassifierStats estimate_stats_tdm(const GeometryConfig& geo,
                                             const PowerPolicy& policy_data,
                                             const PowerPolicy& policy_feedback,
                                             Probability beta, const TdmClassifier& cls,
                                             TdmVariant variant, long trials,
                                             std::uint64_t seed) {
    (void)beta;
    return tdm_variant_stats(
        estimate_tdm(geo, policy_data, policy_feedback, cls, trials, seed), variant);
}

/// Monte Carlo estimation of the two-way classification matrix for both ML
/// variants in one pass, plus the unconditional concurrent decode errors the
/// pinned variants need.
inline TwoWayEstimates estimate_twoway(const GeometryConfig& geo, const PowerPolicy& policy,
                                       const TwoWayClassifier& cls, long trials,
                                       std::uint64_t seed) {
    validate(geo);
    validate(policy);
    if (trials < 3) throw std::invalid_argument("estimate_twoway: trials must be >= 3");
    const auto model = detail::concurrent_model(geo);
    const long n = trials / 3;
    RandomStream rng = RandomStream::derive(seed, 0x7060a11e);

    long count_bin[3][3] = {{0}};
    long count_full[3][3] = {{0}};
    long err_bin_a = 0, err_bin_b = 0, err_full_a = 0, err_full_b = 0;
    long err_any_a = 0, err_any_b = 0;

    // Single-source events.
    for (int ev = 0; ev < 2; ++ev) {
        for (long t = 0; t < n; ++t) {
            const double rho = policy.sample(rng);
            const double z = rho * (ev == 0 ? model.atten_a : model.atten_b);
            const auto lb = classify_twoway(cls, z, false, rng);
            const auto lf = classify_twoway(cls, z, true, rng);
            ++count_bin[ev][static_cast<int>(lb)];
            ++count_full[ev][static_cast<int>(lf)];
        }
    }
    // Concurrent event.
    for (long t = 0; t < n; ++t) {
        const double rho_a = policy.sample(rng), rho_b = policy.sample(rng);
        const int s_a = rng.next_symbol(), s_b = rng.next_symbol();
        const double z = model.power(rho_a, rho_b, s_a, s_b);
        const int decoded = detail::stronger_symbol(rho_a * model.atten_a,
                                                    rho_b * model.atten_b, s_a, s_b, rng);
        if (decoded != s_a) ++err_any_a;
        if (decoded != s_b) ++err_any_b;
        const auto lb = classify_twoway(cls, z, false, rng);
        const auto lf = classify_twoway(cls, z, true, rng);
        ++count_bin[2][static_cast<int>(lb)];
        ++count_full[2][static_cast<int>(lf)];
        if (lb == TwoWayLabel::alice && decoded != s_a) ++err_bin_a;
        if (lb == TwoWayLabel::bob && decoded != s_b) ++err_bin_b;
        if (lf == TwoWayLabel::alice && decoded != s_a) ++err_full_a;
        if (lf == TwoWayLabel::bob && decoded != s_b) ++err_full_b;
    }

    const auto fill = [n](TwoWayClassifierStats& s, const long counts[3][3], long ea, long eb) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s.p[i][j] = static_cast<double>(counts[i][j]) / n;
        s.p_e_ab_to_a =
            counts[2][0] > 0 ? static_cast<double>(ea) / counts[2][0] : 0.0;
        s.p_e_ab_to_b =
            counts[2][1] > 0 ? static_cast<double>(eb) / counts[2][1] : 0.0;
    };
    TwoWayEstimates out;
    out.trials_per_event = n;
    fill(out.ml_binary, count_bin, err_bin_a, err_bin_b);
    fill(out.ml_full, count_full, err_full_a, err_full_b);
    out.err_ab_alice = static_cast<double>(err_any_a) / n;
    out.err_ab_bob = static_cast<double>(err_any_b) / n;
    return out;
}

inline TwoWayClassifierStats twoway_variant_stats(const TwoWayEstimates& est, TwoWayVariant v) {
    switch (v) {
        case TwoWayVariant::ml_binary:
            return est.ml_binary;
        case TwoWayVariant::ml_full:
            return est.ml_full;
        case TwoWayVariant::pin_alice: {
            // Eve files every non-silent symbol under Alice's stream; the
            // decode rule is unchanged.
            TwoWayClassifierStats s;
            s.p[0][0] = s.p[1][0] = s.p[2][0] = 1.0;
            s.p_e_ab_to_a = est.err_ab_alice;
            return s;
        }
        case TwoWayVariant::pin_bob: {
            TwoWayClassifierStats s;
            s.p[0][1] = s.p[1][1] = s.p[2][1] = 1.0;
            s.p_e_ab_to_b = est.err_ab_bob;
            return s;
        }
    }
    return est.ml_binary;
}

/// Secrecy-rate evaluation for one parameter choice, plus the optimizing
/// report fields.
struct SecrecyRateReport {
    double r_m = 0.0;
    double r_ea = 0.0;  // equals r_eb for the TDM protocol
    double r_eb = 0.0;
    double r_s = 0.0;
    double param = 0.0;        // beta (TDM) or P_t (two-way) achieving r_s
    double worst_theta = 0.0;  // Eve angle attaining the inner minimum
    std::string worst_variant;
};

/// The main-channel factor 1 - H(1 - phi(sqrt(rho_min / d_AB^alpha))), or
/// exactly 1 when sufficient error control coding is assumed.
inline double main_channel_factor(const GeometryConfig& geo, const PowerPolicy& policy,
                                  bool noiseless_main) {
    if (noiseless_main) return 1.0;
    const double arg = std::sqrt(policy.rho_min / std::pow(geo.d_ab, geo.alpha_pl));
    const double pe = 1.0 - gaussian_cdf(arg);
    return 1.0 - binary_entropy(pe);
}

/// Per-direction TDM rates for one feedback probability. The 0.5
/// time-division factor is applied by the optimizer wrapper, not here.
inline SecrecyRateReport rate_tdm(const TdmClassifierStats& stats, Probability beta,
                                  const GeometryConfig& geo, const PowerPolicy& policy,
                                  bool noiseless_main) {
    const double b = beta;
    SecrecyRateReport rep;
    rep.param = b;
    rep.r_m = (1.0 - b) * main_channel_factor(geo, policy, noiseless_main);
    const double kept = 1.0 - b * (1.0 - stats.p_m) - (1.0 - b) * stats.p_f;
    double r_e = 0.0;
    if (kept > 0.0) {
        const double pe = b * stats.p_m * stats.p_e_given_m / kept;
        r_e = kept * (1.0 - binary_entropy(std::min(pe, 1.0)));
    }
    rep.r_ea = rep.r_eb = r_e;
    rep.r_s = std::max(rep.r_m - r_e, 0.0);
    return rep;
}

/// Two-way randomized-scheduling rates for one transmit probability.
inline SecrecyRateReport rate_twoway(const TwoWayClassifierStats& s, Probability p_t,
                                     const GeometryConfig& geo, const PowerPolicy& policy,
                                     bool noiseless_main) {
    const double pt = p_t;
    SecrecyRateReport rep;
    rep.param = pt;
    rep.r_m = pt * (1.0 - pt) * main_channel_factor(geo, policy, noiseless_main);

    const double pair = pt * pt, single = pt * (1.0 - pt);
    const double d_a = pair * s.p[2][0] + single * s.p[1][0] +
                       single * (1.0 - s.p[0][1] - s.p[0][2]);
    const double d_b = pair * s.p[2][1] + single * s.p[0][1] +
                       single * (1.0 - s.p[1][0] - s.p[1][2]);
    const double pe_a = pair * s.p[2][0] * s.p_e_ab_to_a + 0.5 * single * s.p[1][0];
    const double pe_b = pair * s.p[2][1] * s.p_e_ab_to_b + 0.5 * single * s.p[0][1];

    const auto leak = [](double d, double pe) {
        if (d <= 0.0) return 0.0;
        return d * (1.0 - binary_entropy(std::min(pe / d, 1.0)));
    };
    rep.r_ea = leak(d_a, pe_a);
    rep.r_eb = leak(d_b, pe_b);
    rep.r_s = std::max(rep.r_m - std::max(rep.r_ea, rep.r_eb), 0.0);
    return rep;
}

/// Closed-form asymptotic rate of the two-way scheme as the exclusion radius
/// grows without bound, maximized over the transmit probability grid.
inline SecrecyRateReport asymptotic_rmax(double rho_min, double d_ab, double alpha_pl,
                                         bool noiseless_main, double p_t_step = 1e-4) {
    if (!(p_t_step > 0.0 && p_t_step <= 0.5))
        throw std::invalid_argument("asymptotic_rmax: p_t_step must be in (0, 0.5]");
    GeometryConfig geo;
    geo.d_ab = d_ab;
    geo.alpha_pl = alpha_pl;
    PowerPolicy policy;
    policy.rho_min = rho_min;
    policy.rho_max = std::max(rho_min, policy.rho_max);
    const double factor = main_channel_factor(geo, policy, noiseless_main);
    const double penalty_rate = 1.0 - binary_entropy(0.25);

    SecrecyRateReport best;
    const int n = static_cast<int>(std::lround(1.0 / p_t_step));
    for (int i = 0; i <= n; ++i) {
        const double pt = std::min(1.0, i * p_t_step);
        const double r_m = pt * (1.0 - pt) * factor;
        const double r_e = (1.0 - (1.0 - pt) * (1.0 - pt)) * penalty_rate;
        const double r_s = std::max(r_m - r_e, 0.0);
        if (r_s > best.r_s || i == 0) {
            best.r_m = r_m;
            best.r_ea = best.r_eb = r_e;
            best.r_s = r_s;
            best.param = pt;
        }
    }
    best.worst_variant = "asymptotic";
    return best;
}

enum class ProtocolMode { tdm, two_way };

/// Scenario description for the optimizing simulations.
struct SimScenario {
    GeometryConfig geo;         // theta is ignored; swept over [0, pi/2]
    PowerPolicy policy;         // data symbols (and two-way symbols)
    PowerPolicy policy_feedback;  // TDM feedback symbols
    int theta_count = 64;
    std::vector<double> param_grid;  // beta or P_t values
    std::vector<TdmVariant> tdm_variants{TdmVariant::ml, TdmVariant::pin_clean};
    std::vector<TwoWayVariant> twoway_variants{
        TwoWayVariant::ml_binary, TwoWayVariant::ml_full, TwoWayVariant::pin_alice,
        TwoWayVariant::pin_bob};
    long train_trials = 100000;
    long trials = 1000000;
    std::uint64_t seed = 1;
    bool noiseless_main = true;
};

inline std::vector<double> default_param_grid(int count = 101) {
    if (count < 2) throw std::invalid_argument("default_param_grid: need at least 2 points");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = static_cast<double>(i) / (count - 1);
    return g;
}

namespace detail {

inline std::vector<double> theta_grid(int count) {
    if (count < 1) throw std::invalid_argument("theta grid must have at least one point");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = count == 1 ? M_PI_2 : M_PI_2 * i / (count - 1);
    return g;
}

}  // namespace detail

/// Per-theta estimates across the sweep, reusable by both the optimizer and
/// the figure emitters.
///
/// The TDM protocol is role-asymmetric (one node sends data, the other jams),
/// so Eve at theta and at pi - theta see different scenarios; the worst case
/// over her position must cover both mirrored placements. The two-way sweep
/// needs only [0, pi/2]: swapping the users maps pi - theta back to theta and
/// leaves the symmetric rate expression unchanged.
struct TdmThetaData {
    double theta;
    EveDistances dist;
    TdmEstimates est;         // Eve at theta (the closer-to-Bob half)
    TdmEstimates est_mirror;  // Eve at pi - theta (closer to the data sender)
};

struct TwoWayThetaData {
    double theta;
    EveDistances dist;
    TwoWayEstimates est;
};

inline std::vector<TdmThetaData> tdm_theta_sweep(const SimScenario& sc) {
    std::vector<TdmThetaData> out;
    const auto thetas = detail::theta_grid(sc.theta_count);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        GeometryConfig geo = sc.geo;
        geo.theta = thetas[i];
        const auto cls = train_tdm_classifier(geo, sc.policy, sc.policy_feedback,
                                              sc.train_trials, sc.seed + 4 * i);
        const auto est = estimate_tdm(geo, sc.policy, sc.policy_feedback, cls, sc.trials,
                                      sc.seed + 4 * i + 1);
        GeometryConfig mirrored = geo;
        mirrored.theta = M_PI - thetas[i];
        const auto cls_m = train_tdm_classifier(mirrored, sc.policy, sc.policy_feedback,
                                                sc.train_trials, sc.seed + 4 * i + 2);
        const auto est_m = estimate_tdm(mirrored, sc.policy, sc.policy_feedback, cls_m,
                                        sc.trials, sc.seed + 4 * i + 3);
        out.push_back({thetas[i], place_eve(geo), est, est_m});
    }
    return out;
}

inline std::vector<TwoWayThetaData> twoway_theta_sweep(const SimScenario& sc) {
    std::vector<TwoWayThetaData> out;
    const auto thetas = detail::theta_grid(sc.theta_count);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        GeometryConfig geo = sc.geo;
        geo.theta = thetas[i];
        const auto cls =
            train_twoway_classifier(geo, sc.policy, sc.train_trials, sc.seed + 2 * i);
        out.push_back({thetas[i], place_eve(geo),
                       estimate_twoway(geo, sc.policy, cls, sc.trials, sc.seed + 2 * i + 1)});
    }
    return out;
}

/// Worst case over the classifier variants and the two mirrored Eve
/// placements at one angle, for one parameter.
inline SecrecyRateReport worst_tdm_report(const TdmThetaData& td, double beta,
                                          const SimScenario& sc) {
    GeometryConfig geo = sc.geo;
    geo.theta = td.theta;
    SecrecyRateReport worst;
    bool init = true;
    for (int side = 0; side < 2; ++side) {
        const TdmEstimates& est = side == 0 ? td.est : td.est_mirror;
        const double theta = side == 0 ? td.theta : M_PI - td.theta;
        for (auto v : sc.tdm_variants) {
            auto rep = rate_tdm(tdm_variant_stats(est, v), beta, geo, sc.policy,
                                sc.noiseless_main);
            rep.worst_theta = theta;
            rep.worst_variant = name(v);
            if (init || rep.r_s < worst.r_s) {
                worst = rep;
                init = false;
            }
        }
    }
    return worst;
}

inline SecrecyRateReport worst_twoway_report(const TwoWayThetaData& td, double p_t,
                                             const SimScenario& sc) {
    GeometryConfig geo = sc.geo;
    geo.theta = td.theta;
    SecrecyRateReport worst;
    bool init = true;
    for (auto v : sc.twoway_variants) {
        auto rep = rate_twoway(twoway_variant_stats(td.est, v), p_t, geo, sc.policy,
                               sc.noiseless_main);
        rep.worst_theta = td.theta;
        rep.worst_variant = name(v);
        if (init || rep.r_s < worst.r_s) {
            worst = rep;
            init = false;
        }
    }
    return worst;
}

/// Best protocol parameter for a fixed angle. The TDM rate carries the 0.5
/// time-division factor.
inline SecrecyRateReport best_tdm_report(const TdmThetaData& td, const SimScenario& sc) {
    SecrecyRateReport best;
    bool init = true;
    for (double beta : sc.param_grid) {
        auto worst = worst_tdm_report(td, beta, sc);
        worst.r_s *= 0.5;
        if (init || worst.r_s > best.r_s) {
            best = worst;
            init = false;
        }
    }
    return best;
}

inline SecrecyRateReport best_twoway_report(const TwoWayThetaData& td, const SimScenario& sc) {
    SecrecyRateReport best;
    bool init = true;
    for (double pt : sc.param_grid) {
        const auto worst = worst_twoway_report(td, pt, sc);
        if (init || worst.r_s > best.r_s) {
            best = worst;
            init = false;
        }
    }
    return best;
}

/// One point of the per-angle rate curve: the optimized rate when Eve sits at
/// this specific angle (the variant minimum still applies).
struct ThetaCurvePoint {
    double theta;
    double distance_ratio;  // min(d_ae, d_be) / max(d_ae, d_be)
    SecrecyRateReport report;
};

/// Optimized secrecy rate per Eve angle, for the distance-ratio figures. The
/// TDM rates carry the 0.5 time-division factor.
inline double distance_ratio(const EveDistances& d) {
    return std::min(d.d_ae, d.d_be) / std::max(d.d_ae, d.d_be);
}

inline std::vector<ThetaCurvePoint> secrecy_vs_theta(ProtocolMode mode, const SimScenario& sc) {
    if (sc.param_grid.empty()) throw std::invalid_argument("secrecy_vs_theta: empty param grid");
    std::vector<ThetaCurvePoint> out;
    if (mode == ProtocolMode::tdm) {
        for (const auto& td : tdm_theta_sweep(sc))
            out.push_back({td.theta, distance_ratio(td.dist), best_tdm_report(td, sc)});
    } else {
        for (const auto& td : twoway_theta_sweep(sc))
            out.push_back({td.theta, distance_ratio(td.dist), best_twoway_report(td, sc)});
    }
    return out;
}

/// Outer maximum over the protocol parameter of the inner minimum over Eve
/// angle and classifier variant. The TDM secrecy rate carries the 0.5
/// time-division factor.
inline SecrecyRateReport optimize_secrecy(ProtocolMode mode, const SimScenario& sc) {
    if (sc.param_grid.empty()) throw std::invalid_argument("optimize_secrecy: empty param grid");
    SecrecyRateReport best;
    bool first = true;
    if (mode == ProtocolMode::tdm) {
        const auto sweep = tdm_theta_sweep(sc);
        for (double beta : sc.param_grid) {
            SecrecyRateReport worst;
            bool winit = true;
            for (const auto& td : sweep) {
                const auto rep = worst_tdm_report(td, beta, sc);
                if (winit || rep.r_s < worst.r_s) {
                    worst = rep;
                    winit = false;
                }
            }
            worst.r_s *= 0.5;  // time division between the two directions
            if (first || worst.r_s > best.r_s) {
                best = worst;
                first = false;
            }
        }
    } else {
        const auto sweep = twoway_theta_sweep(sc);
        for (double pt : sc.param_grid) {
            SecrecyRateReport worst;
            bool winit = true;
            for (const auto& td : sweep) {
                const auto rep = worst_twoway_report(td, pt, sc);
                if (winit || rep.r_s < worst.r_s) {
                    worst = rep;
                    winit = false;
                }
            }
            if (first || worst.r_s > best.r_s) {
                best = worst;
                first = false;
            }
        }
    }
    return best;
}

}  // namespace wiretap
