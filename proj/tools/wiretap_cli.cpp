// Command-line front end: computes achievable secrecy-rate regions for the
// two-way wiretap channel and runs the near-field randomized-scheduling
// simulations, emitting figure-ready CSV or JSON tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wiretap/classifier.hpp"
#include "wiretap/full_duplex.hpp"
#include "wiretap/geometry.hpp"
#include "wiretap/half_duplex.hpp"
#include "wiretap/quadrature.hpp"
#include "wiretap/region.hpp"
#include "wiretap/result_table.hpp"
#include "wiretap/secrecy_rates.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

/// Values from a JSON config file sit under explicit CLI flags; every key
/// must match a registered option name or validation fails.
class ConfigLayer {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        in >> cfg_;
        if (!cfg_.is_object()) throw std::domain_error("config root must be an object");
    }

    template <typename T>
    void apply(const CLI::App& cmd, const std::string& name, T& value) {
        known_.insert(name);
        if (cfg_.contains(name) && cmd.count("--" + name) == 0) {
            try {
                value = cfg_.at(name).get<T>();
            } catch (const json::exception&) {
                throw std::domain_error("config field has wrong type: " + name);
            }
        }
    }

    void finish() const {
        for (const auto& item : cfg_.items())
            if (!known_.count(item.key()))
                throw std::domain_error("unknown config key: " + item.key());
    }

private:
    json cfg_ = json::object();
    std::set<std::string> known_;
};

struct OutputOptions {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 1;
    bool fine = false;
    std::string config_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON config file; flags override its values");
    cmd->add_option("--out", o.out, "output file path");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", o.seed, "random seed for simulations and metadata");
    cmd->add_flag("--fine", o.fine, "double every grid resolution");
}

void merge_output_options(ConfigLayer& cfg, const CLI::App& cmd, OutputOptions& o) {
    cfg.apply(cmd, "out", o.out);
    cfg.apply(cmd, "format", o.format);
    cfg.apply(cmd, "seed", o.seed);
    cfg.apply(cmd, "fine", o.fine);
    if (o.format != "csv" && o.format != "json")
        throw std::domain_error("format must be csv or json");
}

std::string default_out_path(const std::string& subcommand, const std::string& format) {
    const char* dir = std::getenv("WIRETAP_OUT_DIR");
    std::string base = dir && *dir ? std::string(dir) + "/" : std::string();
    return base + subcommand + "." + format;
}

void write_table(const wiretap::ResultTable& table, const OutputOptions& o,
                 const std::string& subcommand) {
    const std::string path = o.out.empty() ? default_out_path(subcommand, o.format) : o.out;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (o.format == "json")
        wiretap::emit_json(table, out);
    else
        wiretap::emit_csv(table, out);
    if (!out) throw std::runtime_error("write failed: " + path);
    std::cout << "wrote " << path << "\n";
}

wiretap::ResultTable make_table(std::vector<std::string> columns, const json& effective_config,
                                std::uint64_t seed) {
    wiretap::ResultTable t;
    t.columns = std::move(columns);
    t.tool_version = kVersion;
    t.seed = seed;
    t.digest = wiretap::config_digest(effective_config.dump());
    return t;
}

void append_boundary(wiretap::ResultTable& t, const wiretap::RateRegion& region, int samples,
                     std::optional<double> curve_id = std::nullopt) {
    for (const auto& p : wiretap::boundary_samples(region, samples)) {
        if (curve_id)
            t.rows.push_back({*curve_id, p.r1, p.r2});
        else
            t.rows.push_back({p.r1, p.r2});
    }
}

// ---------------------------------------------------------------------------
// Subcommand parameter blocks (defaults reproduce the reference figures).

struct FdModuloParams {
    double eps1 = 0.2, eps2 = 0.3, eps_e = 0.25;
    double step = 0.01;
    int samples = 201;
};

struct FdGaussianParams {
    double ge1 = 10.0, ge2 = 0.1, rho1 = 1.0, rho2 = 100.0;
    int budget_count = 50, codeword_count = 50;
    int samples = 201;
};

struct CompareParams {
    double ge1 = 5.0, ge2 = 0.1, rho1 = 1.0, rho2 = 1.0;
    int budget_count = 50, codeword_count = 50;
    double alpha_step = 1e-4;
    int samples = 101;
};

struct HdModuloParams {
    double eps1 = 0.2, eps2 = 0.3, eps_e = 0.25;
    double prob_step = 0.05, sched_step = 0.05;
    int samples = 201;
};

struct HdGaussianParams {
    double ge1 = 5.0, ge2 = 0.1, rho1 = 1.0, rho2 = 1.0;
    int rho_r_count = 8, split_count = 10, sched_count = 10;
    double rho_r_max_scale = 2.0;
    int samples = 201;
};

struct SimParams {
    double d_ab = 1.0, r_e = 10.0;
    double alpha_pl = 2.0, k_wave = 50.265482457436690;
    double rho_min = 1.0, rho_max = 100.0;
    std::vector<double> levels;
    int theta_count = 64;
    int param_count = 51;
    long trials = 200000;
    long train_trials = 100000;
    bool noisy_main = false;
    bool per_theta = false;
};

struct AsymptoteParams {
    double rho_min = 1.0, d_ab = 1.0, alpha_pl = 2.0;
    double pt_step = 1e-5;
    bool noisy_main = false;
};

void check_probability(const char* field, double v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string("invalid field ") + field +
                                ": must be a probability in [0,1]");
}

void check_positive(const char* field, double v) {
    if (!(v > 0.0))
        throw std::domain_error(std::string("invalid field ") + field + ": must be positive");
}

void check_non_negative(const char* field, double v) {
    if (!(v >= 0.0))
        throw std::domain_error(std::string("invalid field ") + field +
                                ": must be non-negative");
}

wiretap::SimScenario to_scenario(const SimParams& p, std::uint64_t seed) {
    if (p.trials < 1) throw std::domain_error("invalid field trials: must be >= 1");
    if (p.train_trials < 1) throw std::domain_error("invalid field train_trials: must be >= 1");
    if (p.theta_count < 1) throw std::domain_error("invalid field theta_count: must be >= 1");
    if (p.param_count < 2) throw std::domain_error("invalid field param_count: must be >= 2");
    wiretap::SimScenario sc;
    sc.geo.d_ab = p.d_ab;
    sc.geo.r_e = p.r_e;
    sc.geo.alpha_pl = p.alpha_pl;
    sc.geo.k_wave = p.k_wave;
    sc.policy.rho_min = p.rho_min;
    sc.policy.rho_max = p.rho_max;
    sc.policy.levels = p.levels;
    sc.policy_feedback = sc.policy;
    sc.theta_count = p.theta_count;
    sc.param_grid = wiretap::default_param_grid(p.param_count);
    sc.trials = p.trials;
    sc.train_trials = p.train_trials;
    sc.seed = seed;
    sc.noiseless_main = !p.noisy_main;
    check_positive("d_ab", p.d_ab);
    check_positive("r_e", p.r_e);
    check_positive("rho_min", p.rho_min);
    validate(sc.geo);
    validate(sc.policy);
    return sc;
}

// ---------------------------------------------------------------------------
// Subcommand runners.

void run_fd_modulo(const FdModuloParams& p, const OutputOptions& o) {
    check_probability("eps1", p.eps1);
    check_probability("eps2", p.eps2);
    check_probability("eps_e", p.eps_e);
    const double step = o.fine ? p.step / 2.0 : p.step;
    const wiretap::ModuloChannel ch{p.eps1, p.eps2, p.eps_e};
    const auto region = wiretap::fm_region(ch, step);
    const json cfg{{"cmd", "region-fd-modulo"}, {"eps1", p.eps1},
                   {"eps2", p.eps2},            {"eps_e", p.eps_e},
                   {"step", step},              {"samples", p.samples},
                   {"seed", o.seed}};
    auto table = make_table({"r1", "r2"}, cfg, o.seed);
    append_boundary(table, region, p.samples);
    write_table(table, o, "region-fd-modulo");
}

void run_fd_gaussian(const FdGaussianParams& p, const OutputOptions& o) {
    check_non_negative("ge1", p.ge1);
    check_non_negative("ge2", p.ge2);
    check_non_negative("rho1", p.rho1);
    check_non_negative("rho2", p.rho2);
    const int mul = o.fine ? 2 : 1;
    const wiretap::GaussianChannel ch{1.0, 1.0, p.ge1, p.ge2, p.rho1, p.rho2};
    const auto region = wiretap::fg_region(ch, {p.budget_count * mul, p.codeword_count * mul});
    const json cfg{{"cmd", "region-fd-gaussian"},
                   {"ge1", p.ge1},
                   {"ge2", p.ge2},
                   {"rho1", p.rho1},
                   {"rho2", p.rho2},
                   {"budget_count", p.budget_count * mul},
                   {"codeword_count", p.codeword_count * mul},
                   {"samples", p.samples},
                   {"seed", o.seed}};
    auto table = make_table({"r1", "r2"}, cfg, o.seed);
    append_boundary(table, region, p.samples);
    write_table(table, o, "region-fd-gaussian");
}

void run_compare_gaussian(const CompareParams& p, const OutputOptions& o) {
    check_non_negative("ge1", p.ge1);
    check_non_negative("ge2", p.ge2);
    check_non_negative("rho1", p.rho1);
    check_non_negative("rho2", p.rho2);
    const int mul = o.fine ? 2 : 1;
    using wiretap::SplitMode;
    const wiretap::GaussianChannel ch{1.0, 1.0, p.ge1, p.ge2, p.rho1, p.rho2};
    const wiretap::FgSweep base{p.budget_count * mul, p.codeword_count * mul};
    const json cfg{{"cmd", "compare-gaussian"},
                   {"ge1", p.ge1},
                   {"ge2", p.ge2},
                   {"rho1", p.rho1},
                   {"rho2", p.rho2},
                   {"budget_count", base.budget_count},
                   {"codeword_count", base.codeword_count},
                   {"alpha_step", p.alpha_step},
                   {"samples", p.samples},
                   {"seed", o.seed}};
    auto table = make_table({"curve_id", "r1", "r2"}, cfg, o.seed);
    // Curves: 0 full region, 1 binning only, 2 jamming at user 1,
    // 3 jamming at user 2, 4 He-Yener three-point region, 5 backward key.
    append_boundary(table, wiretap::fg_region(ch, base), p.samples, 0.0);
    append_boundary(
        table,
        wiretap::fg_region(ch, {base.budget_count, base.codeword_count,
                                SplitMode::codeword_only, SplitMode::codeword_only}),
        p.samples, 1.0);
    append_boundary(
        table,
        wiretap::fg_region(ch, {base.budget_count, base.codeword_count, SplitMode::noise_only,
                                SplitMode::codeword_only}),
        p.samples, 2.0);
    append_boundary(
        table,
        wiretap::fg_region(ch, {base.budget_count, base.codeword_count,
                                SplitMode::codeword_only, SplitMode::noise_only}),
        p.samples, 3.0);
    append_boundary(table, wiretap::he_yener_region(ch, p.alpha_step), p.samples, 4.0);
    append_boundary(table, wiretap::backward_key_region(ch, p.alpha_step), p.samples, 5.0);
    write_table(table, o, "compare-gaussian");
}

void run_hd_modulo(const HdModuloParams& p, const OutputOptions& o) {
    check_probability("eps1", p.eps1);
    check_probability("eps2", p.eps2);
    check_probability("eps_e", p.eps_e);
    const double div = o.fine ? 2.0 : 1.0;
    const wiretap::ModuloChannel ch{p.eps1, p.eps2, p.eps_e};
    const auto region = wiretap::hm_region(ch, {p.prob_step / div, p.sched_step / div});
    const json cfg{{"cmd", "region-hd-modulo"},      {"eps1", p.eps1},
                   {"eps2", p.eps2},                 {"eps_e", p.eps_e},
                   {"prob_step", p.prob_step / div}, {"sched_step", p.sched_step / div},
                   {"samples", p.samples},           {"seed", o.seed}};
    auto table = make_table({"r1", "r2"}, cfg, o.seed);
    append_boundary(table, region, p.samples);
    write_table(table, o, "region-hd-modulo");
}

void run_hd_gaussian(const HdGaussianParams& p, const OutputOptions& o) {
    check_positive("ge1", p.ge1);
    check_positive("ge2", p.ge2);
    check_non_negative("rho1", p.rho1);
    check_non_negative("rho2", p.rho2);
    const int mul = o.fine ? 2 : 1;
    const wiretap::GaussianChannel ch{1.0, 1.0, p.ge1, p.ge2, p.rho1, p.rho2};
    const wiretap::HgSweep sweep{p.rho_r_count * mul, p.split_count * mul, p.sched_count * mul,
                                 p.rho_r_max_scale};
    const auto region = wiretap::hg_region(ch, sweep);
    const json cfg{{"cmd", "region-hd-gaussian"},
                   {"ge1", p.ge1},
                   {"ge2", p.ge2},
                   {"rho1", p.rho1},
                   {"rho2", p.rho2},
                   {"rho_r_count", sweep.rho_r_count},
                   {"split_count", sweep.split_count},
                   {"sched_count", sweep.sched_count},
                   {"rho_r_max_scale", p.rho_r_max_scale},
                   {"samples", p.samples},
                   {"seed", o.seed}};
    auto table = make_table({"r1", "r2"}, cfg, o.seed);
    append_boundary(table, region, p.samples);
    write_table(table, o, "region-hd-gaussian");
}

json sim_config(const char* cmd, const SimParams& p, const OutputOptions& o) {
    return json{{"cmd", cmd},
                {"d_ab", p.d_ab},
                {"r_e", p.r_e},
                {"alpha_pl", p.alpha_pl},
                {"k_wave", p.k_wave},
                {"rho_min", p.rho_min},
                {"rho_max", p.rho_max},
                {"levels", p.levels},
                {"theta_count", p.theta_count},
                {"param_count", p.param_count},
                {"trials", p.trials},
                {"train_trials", p.train_trials},
                {"noisy_main", p.noisy_main},
                {"per_theta", p.per_theta},
                {"seed", o.seed}};
}

void warn_if_undertrained(long train_trials) {
    if (train_trials < wiretap::kMinClassifierTrials)
        std::cerr << "warning: train_trials=" << train_trials << " is below "
                  << wiretap::kMinClassifierTrials
                  << "; classifier supports may be unreliable\n";
}

void run_sim_tdm(const SimParams& p, const OutputOptions& o) {
    using namespace wiretap;
    const auto sc = to_scenario(p, o.seed);
    const auto cfg = sim_config("sim-tdm", p, o);
    warn_if_undertrained(p.train_trials);
    const auto sweep = tdm_theta_sweep(sc);
    if (p.per_theta) {
        // The *_far columns carry the mirrored placement (Eve at pi - theta,
        // the data-sender side); rates take the worse of the two.
        auto table = make_table({"theta", "d_ratio", "p_m", "p_f", "p_e_given_m", "err_jammed",
                                 "p_m_far", "p_f_far", "p_e_given_m_far", "err_jammed_far",
                                 "beta_opt", "r_s"},
                                cfg, o.seed);
        for (const auto& td : sweep) {
            const auto best = best_tdm_report(td, sc);
            table.rows.push_back({td.theta, distance_ratio(td.dist), td.est.ml.p_m,
                                  td.est.ml.p_f, td.est.ml.p_e_given_m, td.est.err_jammed,
                                  td.est_mirror.ml.p_m, td.est_mirror.ml.p_f,
                                  td.est_mirror.ml.p_e_given_m, td.est_mirror.err_jammed,
                                  best.param, best.r_s});
        }
        write_table(table, o, "sim-tdm");
        return;
    }
    auto table = make_table({"beta", "r_m", "r_e", "r_s"}, cfg, o.seed);
    SecrecyRateReport best;
    bool first = true;
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
        table.rows.push_back({beta, worst.r_m, std::max(worst.r_ea, worst.r_eb), worst.r_s});
        if (first || worst.r_s > best.r_s) {
            best = worst;
            first = false;
        }
    }
    write_table(table, o, "sim-tdm");
    std::cout << "best: beta=" << best.param << " r_s=" << best.r_s
              << " worst_theta=" << best.worst_theta
              << " worst_classifier=" << best.worst_variant << "\n";
}

void run_sim_twoway(const SimParams& p, const OutputOptions& o) {
    using namespace wiretap;
    const auto sc = to_scenario(p, o.seed);
    const auto cfg = sim_config("sim-twoway", p, o);
    warn_if_undertrained(p.train_trials);
    const auto sweep = twoway_theta_sweep(sc);
    if (p.per_theta) {
        auto table = make_table({"theta", "d_ratio", "p_ab_to_a", "p_ab_to_b", "p_a_to_a",
                                 "p_a_to_b", "p_b_to_a", "p_b_to_b", "p_e_ab_to_a",
                                 "p_e_ab_to_b", "err_ab_alice", "err_ab_bob", "pt_opt", "r_s"},
                                cfg, o.seed);
        for (const auto& td : sweep) {
            const auto best = best_twoway_report(td, sc);
            const auto& m = td.est.ml_binary;
            table.rows.push_back({td.theta, distance_ratio(td.dist), m.p[2][0], m.p[2][1],
                                  m.p[0][0], m.p[0][1], m.p[1][0], m.p[1][1], m.p_e_ab_to_a,
                                  m.p_e_ab_to_b, td.est.err_ab_alice, td.est.err_ab_bob,
                                  best.param, best.r_s});
        }
        write_table(table, o, "sim-twoway");
        return;
    }
    auto table = make_table({"p_t", "r_m", "r_ea", "r_eb", "r_s"}, cfg, o.seed);
    SecrecyRateReport best;
    bool first = true;
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
        table.rows.push_back({pt, worst.r_m, worst.r_ea, worst.r_eb, worst.r_s});
        if (first || worst.r_s > best.r_s) {
            best = worst;
            first = false;
        }
    }
    write_table(table, o, "sim-twoway");
    std::cout << "best: p_t=" << best.param << " r_s=" << best.r_s
              << " worst_theta=" << best.worst_theta
              << " worst_classifier=" << best.worst_variant << "\n";
}

void run_asymptote(const AsymptoteParams& p, const OutputOptions& o) {
    check_positive("rho_min", p.rho_min);
    check_positive("d_ab", p.d_ab);
    check_positive("alpha_pl", p.alpha_pl);
    const auto rep =
        wiretap::asymptotic_rmax(p.rho_min, p.d_ab, p.alpha_pl, !p.noisy_main, p.pt_step);
    const json cfg{{"cmd", "asymptote"},     {"rho_min", p.rho_min},
                   {"d_ab", p.d_ab},         {"alpha_pl", p.alpha_pl},
                   {"pt_step", p.pt_step},   {"noisy_main", p.noisy_main},
                   {"seed", o.seed}};
    auto table = make_table({"r_max", "p_t", "r_m", "r_e"}, cfg, o.seed);
    table.rows.push_back({rep.r_s, rep.param, rep.r_m, rep.r_ea});
    write_table(table, o, "asymptote");
    std::cout << "r_max=" << rep.r_s << " at p_t=" << rep.param << "\n";
}

void add_sim_options(CLI::App* cmd, SimParams& p) {
    cmd->add_option("--d_ab", p.d_ab, "Alice-Bob distance, meters");
    cmd->add_option("--r_e", p.r_e, "Eve exclusion radius, meters");
    cmd->add_option("--alpha_pl", p.alpha_pl, "path loss exponent");
    cmd->add_option("--k_wave", p.k_wave, "wave number, rad/m");
    cmd->add_option("--rho_min", p.rho_min, "minimum unit-distance SNR");
    cmd->add_option("--rho_max", p.rho_max, "maximum unit-distance SNR");
    cmd->add_option("--levels", p.levels, "discrete power levels (empty: continuous uniform)");
    cmd->add_option("--theta_count", p.theta_count, "Eve angle grid size on [0, pi/2]");
    cmd->add_option("--param_count", p.param_count, "protocol parameter grid size");
    cmd->add_option("--trials", p.trials, "Monte Carlo trials per angle");
    cmd->add_option("--train_trials", p.train_trials, "classifier training trials per angle");
    cmd->add_flag("--noisy_main", p.noisy_main,
                  "keep the additive-noise term in the main channel rate");
    cmd->add_flag("--per_theta", p.per_theta,
                  "emit the per-angle optimized curve with raw classifier stats");
}

void merge_sim_options(ConfigLayer& cfg, const CLI::App& cmd, SimParams& p) {
    cfg.apply(cmd, "d_ab", p.d_ab);
    cfg.apply(cmd, "r_e", p.r_e);
    cfg.apply(cmd, "alpha_pl", p.alpha_pl);
    cfg.apply(cmd, "k_wave", p.k_wave);
    cfg.apply(cmd, "rho_min", p.rho_min);
    cfg.apply(cmd, "rho_max", p.rho_max);
    cfg.apply(cmd, "levels", p.levels);
    cfg.apply(cmd, "theta_count", p.theta_count);
    cfg.apply(cmd, "param_count", p.param_count);
    cfg.apply(cmd, "trials", p.trials);
    cfg.apply(cmd, "train_trials", p.train_trials);
    cfg.apply(cmd, "noisy_main", p.noisy_main);
    cfg.apply(cmd, "per_theta", p.per_theta);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-way wiretap channel secrecy-rate regions and simulations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    FdModuloParams fdm;
    FdGaussianParams fdg;
    CompareParams cmp;
    HdModuloParams hdm;
    HdGaussianParams hdg;
    SimParams tdm, twoway;
    AsymptoteParams asym;
    OutputOptions out_fdm, out_fdg, out_cmp, out_hdm, out_hdg, out_tdm, out_twoway, out_asym;

    auto* c_fdm =
        app.add_subcommand("region-fd-modulo", "full-duplex modulo-2 achievable region");
    c_fdm->add_option("--eps1", fdm.eps1, "crossover probability at user 1");
    c_fdm->add_option("--eps2", fdm.eps2, "crossover probability at user 2");
    c_fdm->add_option("--eps_e", fdm.eps_e, "crossover probability at Eve");
    c_fdm->add_option("--step", fdm.step, "prefix grid step");
    c_fdm->add_option("--samples", fdm.samples, "boundary sample count");
    add_output_options(c_fdm, out_fdm);

    auto* c_fdg =
        app.add_subcommand("region-fd-gaussian", "full-duplex Gaussian achievable region");
    c_fdg->add_option("--ge1", fdg.ge1, "Eve gain from user 1");
    c_fdg->add_option("--ge2", fdg.ge2, "Eve gain from user 2");
    c_fdg->add_option("--rho1", fdg.rho1, "power budget of user 1");
    c_fdg->add_option("--rho2", fdg.rho2, "power budget of user 2");
    c_fdg->add_option("--budget_count", fdg.budget_count, "used-power grid per user");
    c_fdg->add_option("--codeword_count", fdg.codeword_count, "codeword-fraction grid per user");
    c_fdg->add_option("--samples", fdg.samples, "boundary sample count");
    add_output_options(c_fdg, out_fdg);

    auto* c_cmp = app.add_subcommand(
        "compare-gaussian", "full-duplex Gaussian region with comparison-scheme overlays");
    c_cmp->add_option("--ge1", cmp.ge1, "Eve gain from user 1");
    c_cmp->add_option("--ge2", cmp.ge2, "Eve gain from user 2");
    c_cmp->add_option("--rho1", cmp.rho1, "power budget of user 1");
    c_cmp->add_option("--rho2", cmp.rho2, "power budget of user 2");
    c_cmp->add_option("--budget_count", cmp.budget_count, "used-power grid per user");
    c_cmp->add_option("--codeword_count", cmp.codeword_count, "codeword-fraction grid per user");
    c_cmp->add_option("--alpha_step", cmp.alpha_step, "time-share grid step for the overlays");
    c_cmp->add_option("--samples", cmp.samples, "boundary samples per curve");
    add_output_options(c_cmp, out_cmp);

    auto* c_hdm = app.add_subcommand("region-hd-modulo",
                                     "half-duplex modulo-2 randomized-scheduling region");
    c_hdm->add_option("--eps1", hdm.eps1, "crossover probability at user 1");
    c_hdm->add_option("--eps2", hdm.eps2, "crossover probability at user 2");
    c_hdm->add_option("--eps_e", hdm.eps_e, "crossover probability at Eve");
    c_hdm->add_option("--prob_step", hdm.prob_step, "prefix/input probability grid step");
    c_hdm->add_option("--sched_step", hdm.sched_step, "transmit probability grid step");
    c_hdm->add_option("--samples", hdm.samples, "boundary sample count");
    add_output_options(c_hdm, out_hdm);

    auto* c_hdg = app.add_subcommand("region-hd-gaussian",
                                     "half-duplex Gaussian randomized-scheduling region");
    c_hdg->add_option("--ge1", hdg.ge1, "Eve gain from user 1");
    c_hdg->add_option("--ge2", hdg.ge2, "Eve gain from user 2");
    c_hdg->add_option("--rho1", hdg.rho1, "power budget of user 1");
    c_hdg->add_option("--rho2", hdg.rho2, "power budget of user 2");
    c_hdg->add_option("--rho_r_count", hdg.rho_r_count, "Eve-referred power grid size");
    c_hdg->add_option("--split_count", hdg.split_count, "codeword-fraction grid per user");
    c_hdg->add_option("--sched_count", hdg.sched_count, "transmit-probability grid per user");
    c_hdg->add_option("--rho_r_max_scale", hdg.rho_r_max_scale,
                      "sweep rho_r up to this multiple of max(rho_i g_ei)");
    c_hdg->add_option("--samples", hdg.samples, "boundary sample count");
    add_output_options(c_hdg, out_hdg);

    auto* c_tdm = app.add_subcommand(
        "sim-tdm", "TDM with randomized feedback and power against an energy classifier");
    add_sim_options(c_tdm, tdm);
    add_output_options(c_tdm, out_tdm);

    auto* c_two = app.add_subcommand(
        "sim-twoway", "two-way randomized scheduling and power against an energy classifier");
    add_sim_options(c_two, twoway);
    add_output_options(c_two, out_twoway);

    auto* c_asym =
        app.add_subcommand("asymptote", "closed-form two-way rate for a distant eavesdropper");
    c_asym->add_option("--rho_min", asym.rho_min, "minimum unit-distance SNR");
    c_asym->add_option("--d_ab", asym.d_ab, "Alice-Bob distance, meters");
    c_asym->add_option("--alpha_pl", asym.alpha_pl, "path loss exponent");
    c_asym->add_option("--pt_step", asym.pt_step, "transmit probability grid step");
    c_asym->add_flag("--noisy_main", asym.noisy_main,
                     "keep the additive-noise term in the main channel rate");
    add_output_options(c_asym, out_asym);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_fdm)) {
            ConfigLayer cfg;
            if (!out_fdm.config_path.empty()) cfg.load(out_fdm.config_path);
            merge_output_options(cfg, *c_fdm, out_fdm);
            cfg.apply(*c_fdm, "eps1", fdm.eps1);
            cfg.apply(*c_fdm, "eps2", fdm.eps2);
            cfg.apply(*c_fdm, "eps_e", fdm.eps_e);
            cfg.apply(*c_fdm, "step", fdm.step);
            cfg.apply(*c_fdm, "samples", fdm.samples);
            cfg.finish();
            run_fd_modulo(fdm, out_fdm);
        } else if (app.got_subcommand(c_fdg)) {
            ConfigLayer cfg;
            if (!out_fdg.config_path.empty()) cfg.load(out_fdg.config_path);
            merge_output_options(cfg, *c_fdg, out_fdg);
            cfg.apply(*c_fdg, "ge1", fdg.ge1);
            cfg.apply(*c_fdg, "ge2", fdg.ge2);
            cfg.apply(*c_fdg, "rho1", fdg.rho1);
            cfg.apply(*c_fdg, "rho2", fdg.rho2);
            cfg.apply(*c_fdg, "budget_count", fdg.budget_count);
            cfg.apply(*c_fdg, "codeword_count", fdg.codeword_count);
            cfg.apply(*c_fdg, "samples", fdg.samples);
            cfg.finish();
            run_fd_gaussian(fdg, out_fdg);
        } else if (app.got_subcommand(c_cmp)) {
            ConfigLayer cfg;
            if (!out_cmp.config_path.empty()) cfg.load(out_cmp.config_path);
            merge_output_options(cfg, *c_cmp, out_cmp);
            cfg.apply(*c_cmp, "ge1", cmp.ge1);
            cfg.apply(*c_cmp, "ge2", cmp.ge2);
            cfg.apply(*c_cmp, "rho1", cmp.rho1);
            cfg.apply(*c_cmp, "rho2", cmp.rho2);
            cfg.apply(*c_cmp, "budget_count", cmp.budget_count);
            cfg.apply(*c_cmp, "codeword_count", cmp.codeword_count);
            cfg.apply(*c_cmp, "alpha_step", cmp.alpha_step);
            cfg.apply(*c_cmp, "samples", cmp.samples);
            cfg.finish();
            run_compare_gaussian(cmp, out_cmp);
        } else if (app.got_subcommand(c_hdm)) {
            ConfigLayer cfg;
            if (!out_hdm.config_path.empty()) cfg.load(out_hdm.config_path);
            merge_output_options(cfg, *c_hdm, out_hdm);
            cfg.apply(*c_hdm, "eps1", hdm.eps1);
            cfg.apply(*c_hdm, "eps2", hdm.eps2);
            cfg.apply(*c_hdm, "eps_e", hdm.eps_e);
            cfg.apply(*c_hdm, "prob_step", hdm.prob_step);
            cfg.apply(*c_hdm, "sched_step", hdm.sched_step);
            cfg.apply(*c_hdm, "samples", hdm.samples);
            cfg.finish();
            run_hd_modulo(hdm, out_hdm);
        } else if (app.got_subcommand(c_hdg)) {
            ConfigLayer cfg;
            if (!out_hdg.config_path.empty()) cfg.load(out_hdg.config_path);
            merge_output_options(cfg, *c_hdg, out_hdg);
            cfg.apply(*c_hdg, "ge1", hdg.ge1);
            cfg.apply(*c_hdg, "ge2", hdg.ge2);
            cfg.apply(*c_hdg, "rho1", hdg.rho1);
            cfg.apply(*c_hdg, "rho2", hdg.rho2);
            cfg.apply(*c_hdg, "rho_r_count", hdg.rho_r_count);
            cfg.apply(*c_hdg, "split_count", hdg.split_count);
            cfg.apply(*c_hdg, "sched_count", hdg.sched_count);
            cfg.apply(*c_hdg, "rho_r_max_scale", hdg.rho_r_max_scale);
            cfg.apply(*c_hdg, "samples", hdg.samples);
            cfg.finish();
            run_hd_gaussian(hdg, out_hdg);
        } else if (app.got_subcommand(c_tdm)) {
            ConfigLayer cfg;
            if (!out_tdm.config_path.empty()) cfg.load(out_tdm.config_path);
            merge_output_options(cfg, *c_tdm, out_tdm);
            merge_sim_options(cfg, *c_tdm, tdm);
            cfg.finish();
            run_sim_tdm(tdm, out_tdm);
        } else if (app.got_subcommand(c_two)) {
            ConfigLayer cfg;
            if (!out_twoway.config_path.empty()) cfg.load(out_twoway.config_path);
            merge_output_options(cfg, *c_two, out_twoway);
            merge_sim_options(cfg, *c_two, twoway);
            cfg.finish();
            run_sim_twoway(twoway, out_twoway);
        } else if (app.got_subcommand(c_asym)) {
            ConfigLayer cfg;
            if (!out_asym.config_path.empty()) cfg.load(out_asym.config_path);
            merge_output_options(cfg, *c_asym, out_asym);
            cfg.apply(*c_asym, "rho_min", asym.rho_min);
            cfg.apply(*c_asym, "d_ab", asym.d_ab);
            cfg.apply(*c_asym, "alpha_pl", asym.alpha_pl);
            cfg.apply(*c_asym, "pt_step", asym.pt_step);
            cfg.apply(*c_asym, "noisy_main", asym.noisy_main);
            cfg.finish();
            run_asymptote(asym, out_asym);
        }
    } catch (const wiretap::quadrature_error& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
