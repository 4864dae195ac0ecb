#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wiretap/info_theory.hpp"

using namespace wiretap;
using Catch::Approx;

namespace {

// Independent entropy oracle on a different code path (natural log).
double entropy_ref(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return (-p * std::log(p) - (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
}

}  // namespace

TEST_CASE("binary entropy pinned values") {
    CHECK(binary_entropy(0.5).value() == 1.0);
    CHECK(binary_entropy(0.0).value() == 0.0);
    CHECK(binary_entropy(1.0).value() == 0.0);
    CHECK(binary_entropy(0.25).value() == Approx(0.8112781244591328).margin(1e-15));
}

TEST_CASE("binary entropy symmetry and domain") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = u(gen);
        CHECK(binary_entropy(p).value() == Approx(binary_entropy(1.0 - p).value()).margin(1e-13));
        CHECK(binary_entropy(p).value() == Approx(entropy_ref(p)).margin(1e-13));
    }
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), std::domain_error);
}

TEST_CASE("bsc composition pinned values") {
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(gen);
        CHECK(bsc_compose(0.0, x).value() == Approx(x).margin(1e-15));
        CHECK(bsc_compose(0.5, x).value() == Approx(0.5).margin(1e-15));
    }
    CHECK(bsc_compose(0.2, 0.3).value() == Approx(0.38).margin(1e-15));
    CHECK_THROWS_AS(bsc_compose(1.2, 0.0), std::domain_error);
}

TEST_CASE("bsc composition is commutative, associative, and stays in range") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(gen), b = u(gen), c = u(gen);
        const double ab = bsc_compose(a, b);
        CHECK(ab == Approx(bsc_compose(b, a).value()).margin(1e-15));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(bsc_compose(ab, c).value() ==
              Approx(bsc_compose(a, bsc_compose(b, c)).value()).margin(1e-12));
    }
}

TEST_CASE("gamma rate") {
    CHECK(gamma_rate(0.0).value() == 0.0);
    CHECK(gamma_rate(3.0).value() == Approx(1.0).margin(1e-15));
    CHECK(gamma_rate(1.0).value() == Approx(0.5).margin(1e-15));
    double prev = -1.0;
    for (double snr = 0.0; snr < 50.0; snr += 0.7) {
        const double r = gamma_rate(snr);
        CHECK(r > prev);
        prev = r;
    }
    CHECK_THROWS_AS(gamma_rate(-1e-9), std::domain_error);
}

TEST_CASE("gaussian cdf") {
    CHECK(gaussian_cdf(0.0).value() == Approx(0.5).margin(1e-16));
    CHECK(gaussian_cdf(40.0).value() == 1.0);
    CHECK(gaussian_cdf(1.0).value() == Approx(0.8413447460685429).margin(1e-12));
    double prev = -1.0;
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        const double v = gaussian_cdf(x);
        CHECK(v > prev);
        prev = v;
    }
}
