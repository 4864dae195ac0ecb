#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wiretap/classifier.hpp"
#include "wiretap/geometry.hpp"
#include "wiretap/secrecy_rates.hpp"

using namespace wiretap;
using Catch::Approx;

namespace {

double entropy_ref(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return (-p * std::log(p) - (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
}

GeometryConfig geo_at(double d_ab, double r_e, double theta) {
    GeometryConfig g;
    g.d_ab = d_ab;
    g.r_e = r_e;
    g.theta = theta;
    return g;
}

}  // namespace

TEST_CASE("place_eve geometry") {
    SECTION("symmetry axis") {
        const auto d = place_eve(geo_at(1.0, 4.0, M_PI_2));
        const double expect = std::sqrt(16.0 + 0.25);
        CHECK(d.d_ae == Approx(expect).margin(1e-14));
        CHECK(d.d_be == Approx(expect).margin(1e-14));
    }
    SECTION("collinear") {
        const auto d = place_eve(geo_at(1.0, 4.0, 0.0));
        CHECK(d.d_ae == Approx(4.5).margin(1e-14));
        CHECK(d.d_be == Approx(3.5).margin(1e-14));
    }
    SECTION("far-field ratio approaches one") {
        const auto d = place_eve(geo_at(1.0, 1e6, 0.3));
        CHECK(d.d_ae / d.d_be == Approx(1.0).margin(1e-5));
    }
    SECTION("validation") {
        CHECK_THROWS_AS(place_eve(geo_at(0.0, 1.0, 0.0)), std::domain_error);
        CHECK_THROWS_AS(place_eve(geo_at(1.0, 1.0, 4.0)), std::domain_error);
        // Eve exactly on top of Bob.
        CHECK_THROWS_AS(place_eve(geo_at(1.0, 0.5, 0.0)), std::domain_error);
    }
    SECTION("distances stay outside the exclusion band") {
        std::srand(17);
        for (int i = 0; i < 200; ++i) {
            const double d_ab = 0.1 + 2.0 * (std::rand() / (double)RAND_MAX);
            const double r_e = d_ab * (0.51 + 3.0 * (std::rand() / (double)RAND_MAX));
            const double theta = M_PI * (std::rand() / (double)RAND_MAX);
            const auto d = place_eve(geo_at(d_ab, r_e, theta));
            CHECK(d.d_ae >= r_e - 0.5 * d_ab - 1e-12);
            CHECK(d.d_be >= r_e - 0.5 * d_ab - 1e-12);
        }
    }
}

TEST_CASE("eve received power") {
    // theta = pi puts Eve on Alice's side: d_ae = r_e - d_ab/2, d_be = r_e + d_ab/2.
    GeometryConfig g = geo_at(1.0, 2.5, M_PI);
    const auto d = place_eve(g);
    REQUIRE(d.d_ae == Approx(2.0).margin(1e-12));
    REQUIRE(d.d_be == Approx(3.0).margin(1e-12));

    SECTION("single source is rho / d^alpha") {
        CHECK(eve_received_power(TransmitEvent::alice_only, 4.0, 0.0, 1, 1, g) ==
              Approx(1.0).margin(1e-12));
        CHECK(eve_received_power(TransmitEvent::bob_only, 0.0, 9.0, 1, 1, g) ==
              Approx(1.0).margin(1e-12));
    }
    SECTION("phase difference pi: opposite symbols add, equal symbols cancel") {
        g.k_wave = M_PI;  // k (d_ae - d_be) = -pi
        CHECK(eve_received_power(TransmitEvent::both, 4.0, 9.0, 1, -1, g) ==
              Approx(4.0).margin(1e-9));
        CHECK(eve_received_power(TransmitEvent::both, 4.0, 9.0, 1, 1, g) ==
              Approx(0.0).margin(1e-9));
    }
    SECTION("aligned phases and symbols add amplitudes") {
        GeometryConfig sym = geo_at(1.0, std::sqrt(0.75), M_PI_2);
        const auto dd = place_eve(sym);
        REQUIRE(dd.d_ae == Approx(1.0).margin(1e-12));
        CHECK(eve_received_power(TransmitEvent::both, 1.0, 1.0, 1, 1, sym) ==
              Approx(4.0).margin(1e-12));
        CHECK(eve_received_power(TransmitEvent::both, 1.0, 1.0, 1, -1, sym) ==
              Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("training and estimation are seed-deterministic") {
    const GeometryConfig g = geo_at(1.0, 3.0, 0.7);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto c1 = train_twoway_classifier(g, policy, 20000, 42);
    const auto c2 = train_twoway_classifier(g, policy, 20000, 42);
    CHECK(c1.both.lo == c2.both.lo);
    CHECK(c1.both.hi == c2.both.hi);
    CHECK(c1.both.bins == c2.both.bins);

    const auto e1 = estimate_twoway(g, policy, c1, 30000, 7);
    const auto e2 = estimate_twoway(g, policy, c2, 30000, 7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(e1.ml_binary.p[i][j] == e2.ml_binary.p[i][j]);
    CHECK(e1.err_ab_alice == e2.err_ab_alice);

    const auto t1 = train_tdm_classifier(g, policy, policy, 20000, 5);
    const auto s1 = estimate_tdm(g, policy, policy, t1, 30000, 9);
    const auto s2 = estimate_tdm(g, policy, policy, t1, 30000, 9);
    CHECK(s1.ml.p_m == s2.ml.p_m);
    CHECK(s1.ml.p_f == s2.ml.p_f);
    CHECK(s1.ml.p_e_given_m == s2.ml.p_e_given_m);
    CHECK(train_tdm_classifier(g, policy, policy, 5000, 5).undertrained);
}

TEST_CASE("classification matrix rows are distributions") {
    const GeometryConfig g = geo_at(1.0, 2.0, 0.9);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto cls = train_twoway_classifier(g, policy, 50000, 1);
    const auto est = estimate_twoway(g, policy, cls, 90000, 2);
    for (int i = 0; i < 3; ++i) {
        double bin_sum = 0.0, full_sum = 0.0;
        for (int j = 0; j < 3; ++j) {
            bin_sum += est.ml_binary.p[i][j];
            full_sum += est.ml_full.p[i][j];
        }
        CHECK(bin_sum == Approx(1.0).margin(1e-12));
        CHECK(full_sum == Approx(1.0).margin(1e-12));
        CHECK(est.ml_binary.p[i][2] == 0.0);  // binary never erases
    }
}

TEST_CASE("symmetric geometry balances the two streams") {
    const GeometryConfig g = geo_at(1.0, 3.0, M_PI_2);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto cls = train_twoway_classifier(g, policy, 100000, 11);
    const long trials = 300000;
    const auto est = estimate_twoway(g, policy, cls, trials, 12);
    const double se = 1.0 / std::sqrt(trials / 3.0);
    CHECK(std::abs(est.ml_binary.p[0][0] - est.ml_binary.p[1][1]) < 3.0 * se);
    const auto stats = twoway_variant_stats(est, TwoWayVariant::ml_binary);
    const auto rep = rate_twoway(stats, 0.4, g, policy, true);
    CHECK(std::abs(rep.r_ea - rep.r_eb) < 0.02);
}

TEST_CASE("far geometry drives misclassification to one half") {
    const GeometryConfig g = geo_at(1.0, 150.0, 0.3);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto cls = train_twoway_classifier(g, policy, 100000, 21);
    const auto est = estimate_twoway(g, policy, cls, 240000, 22);
    for (double v : six_single_probs(est.ml_binary)) CHECK(v == Approx(0.5).margin(0.04));
    CHECK(est.err_ab_alice == Approx(0.25).margin(0.02));
    CHECK(est.err_ab_bob == Approx(0.25).margin(0.02));
}

TEST_CASE("close geometry classifies almost perfectly") {
    // Eve nearly on top of Alice: the distance ratio exceeds the power
    // range, so the two single-source supports are disjoint.
    const GeometryConfig g = geo_at(1.0, 0.55, M_PI);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto cls = train_twoway_classifier(g, policy, 100000, 31);
    const auto est = estimate_twoway(g, policy, cls, 120000, 32);
    CHECK(est.ml_binary.p[0][0] > 0.95);
    CHECK(est.ml_binary.p[1][1] > 0.95);
}

TEST_CASE("rate_tdm pinned behavior") {
    const GeometryConfig g = geo_at(1.0, 10.0, M_PI_2);
    const PowerPolicy policy{1.0, 100.0, {}};
    SECTION("perfect classifier gives zero secrecy for every beta") {
        const TdmClassifierStats perfect{0.0, 0.0, 0.0};
        for (double beta = 0.0; beta <= 1.0; beta += 0.01) {
            const auto rep = rate_tdm(perfect, beta, g, policy, true);
            CHECK(rep.r_s == 0.0);
        }
    }
    SECTION("fully-missed jamming recovers H(beta/2) - beta") {
        const TdmClassifierStats stats{1.0, 0.0, 0.5};
        double best = 0.0, best_beta = 0.0;
        for (double beta = 0.0; beta <= 1.0; beta += 1e-4) {
            const auto rep = rate_tdm(stats, std::min(beta, 1.0), g, policy, true);
            CHECK(rep.r_s ==
                  Approx(std::max(entropy_ref(beta / 2.0) - beta, 0.0)).margin(1e-12));
            if (rep.r_s > best) {
                best = rep.r_s;
                best_beta = beta;
            }
        }
        CHECK(best == Approx(entropy_ref(0.2) - 0.4).margin(1e-7));
        CHECK(best_beta == Approx(0.4).margin(1e-3));
    }
    SECTION("no feedback leaks everything") {
        const TdmClassifierStats stats{1.0, 0.0, 0.5};
        const auto rep = rate_tdm(stats, 0.0, g, policy, true);
        CHECK(rep.r_s == 0.0);
    }
}

TEST_CASE("rate_twoway pinned behavior") {
    const GeometryConfig g = geo_at(1.0, 10.0, M_PI_2);
    const PowerPolicy policy{1.0, 100.0, {}};
    SECTION("asymptotic stats recover the closed form") {
        TwoWayClassifierStats s;
        s.p[0][0] = s.p[0][1] = 0.5;
        s.p[1][0] = s.p[1][1] = 0.5;
        s.p[2][0] = s.p[2][1] = 0.5;
        s.p_e_ab_to_a = s.p_e_ab_to_b = 0.25;
        const double penalty = 1.0 - entropy_ref(0.25);
        for (double pt : {0.1, 0.3837, 0.7}) {
            const auto rep = rate_twoway(s, pt, g, policy, true);
            CHECK(rep.r_ea == Approx(pt * (1.0 - 0.5 * pt) * penalty).margin(1e-12));
            CHECK(rep.r_eb == Approx(rep.r_ea).margin(1e-12));
        }
    }
    SECTION("perfect classifier gives zero secrecy") {
        TwoWayClassifierStats s;
        s.p[0][0] = s.p[1][1] = s.p[2][2] = 1.0;
        for (double pt = 0.0; pt <= 1.0; pt += 0.01) {
            const auto rep = rate_twoway(s, pt, g, policy, true);
            CHECK(rep.r_s == 0.0);
        }
    }
    SECTION("degenerate transmit probabilities") {
        TwoWayClassifierStats s;
        s.p[0][0] = s.p[1][1] = 1.0;
        CHECK(rate_twoway(s, 0.0, g, policy, true).r_s == 0.0);
        CHECK(rate_twoway(s, 1.0, g, policy, true).r_s == 0.0);
    }
    SECTION("pinned stats reproduce the Corollary 6 leakage") {
        TwoWayEstimates est;
        est.err_ab_alice = 0.25;
        const auto pinned = twoway_variant_stats(est, TwoWayVariant::pin_alice);
        const double penalty = 1.0 - entropy_ref(0.25);
        for (double pt : {0.2, 0.5}) {
            const auto rep = rate_twoway(pinned, pt, g, policy, true);
            CHECK(rep.r_ea ==
                  Approx((1.0 - (1.0 - pt) * (1.0 - pt)) * penalty).margin(1e-12));
            CHECK(rep.r_eb == 0.0);
        }
    }
}

TEST_CASE("asymptotic rmax") {
    SECTION("frozen grid-oracle optimum") {
        const auto rep = asymptotic_rmax(1.0, 1.0, 2.0, true, 1e-5);
        CHECK(rep.r_s == Approx(0.119434).margin(1e-5));
        CHECK(rep.param == Approx(0.38371).margin(1e-4));
    }
    SECTION("main channel dies as rho_min vanishes") {
        const auto rep = asymptotic_rmax(1e-12, 1.0, 2.0, false, 1e-3);
        CHECK(rep.r_s == Approx(0.0).margin(1e-6));
    }
    SECTION("report fields are mutually consistent at the optimum") {
        const auto rep = asymptotic_rmax(1.0, 1.0, 2.0, true, 1e-4);
        CHECK(rep.r_m == Approx(rep.param * (1.0 - rep.param)).margin(1e-12));
        CHECK(rep.r_m - rep.r_ea == Approx(rep.r_s).margin(1e-12));
    }
}

TEST_CASE("discrete power levels produce exact-match classification") {
    PowerPolicy policy{1.0, 100.0, {1.0, 10.0, 100.0}};
    SECTION("levels outside the range are rejected") {
        PowerPolicy bad{1.0, 100.0, {0.5}};
        CHECK_THROWS_AS(validate(bad), std::domain_error);
    }
    SECTION("distinct distances separate the atoms at any radius") {
        // A noiseless Eve resolves exact powers, so off-axis discrete levels
        // are almost surely attributable regardless of distance.
        const GeometryConfig g = geo_at(1.0, 50.0, 0.4);
        const auto cls = train_twoway_classifier(g, policy, 20000, 81);
        const auto est = estimate_twoway(g, policy, cls, 60000, 82);
        CHECK(est.ml_binary.p[0][0] > 0.99);
        CHECK(est.ml_binary.p[1][1] > 0.99);
    }
    SECTION("the symmetric point makes the atom sets coincide exactly") {
        const GeometryConfig g = geo_at(1.0, 50.0, M_PI_2);
        const auto cls = train_twoway_classifier(g, policy, 20000, 83);
        const auto est = estimate_twoway(g, policy, cls, 90000, 84);
        CHECK(est.ml_binary.p[0][0] == Approx(0.5).margin(0.02));
        CHECK(est.ml_binary.p[1][0] == Approx(0.5).margin(0.02));
    }
}

TEST_CASE("tdm stats behave at a symmetric far geometry") {
    const GeometryConfig g = geo_at(1.0, 120.0, M_PI_2);
    const PowerPolicy policy{1.0, 100.0, {}};
    const auto cls = train_tdm_classifier(g, policy, policy, 100000, 61);
    const auto est = estimate_tdm(g, policy, policy, cls, 200000, 62);
    // Roughly half the jammed powers land inside the clean support and then
    // face a coin flip; clean symbols almost always face one.
    CHECK(est.ml.p_m > 0.15);
    CHECK(est.ml.p_f > 0.4);
    CHECK(est.err_jammed == Approx(0.25).margin(0.02));
}
