#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "cqed/laser.hpp"
#include "cqed/units.hpp"

using namespace cqed;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const AngularFrequency kKappa = linear_ghz_to_angular(16.0);
}

TEST_CASE("pump rate for a target photon number") {
    const auto params = LaserParams::from_beta(kKappa, 0.85);

    CHECK(pump_for_photon_number(params, 0.0) == 0.0);
    CHECK_THAT(pump_for_photon_number(params, 1.0),
               WithinRel(kKappa.value * (1.0 + 1.0 / 0.85), 1e-12));

    SECTION("far above threshold every pumped excitation leaves as a photon") {
        const double p = 1e8;
        CHECK_THAT(pump_for_photon_number(params, p),
                   WithinRel(2.0 * kKappa.value * p, 1e-6));
    }
    SECTION("strictly increasing in p") {
        double prev = -1.0;
        for (double p = 0.0; p < 10.0; p += 0.1) {
            const double r = pump_for_photon_number(params, p);
            CHECK(r > prev);
            prev = r;
        }
    }
    SECTION("negative photon number rejected") {
        CHECK_THROWS_AS(pump_for_photon_number(params, -0.1), std::invalid_argument);
    }
}

TEST_CASE("photon number from pump rate") {
    for (double beta : {1e-3, 1e-2, 0.1, 0.85, 1.0}) {
        const auto params = LaserParams::from_beta(kKappa, beta);
        CHECK_THAT(photon_number_for_pump(params, threshold_pump(params)), WithinRel(1.0, 1e-9));
        CHECK(photon_number_for_pump(params, 0.0) == 0.0);
    }
    const auto unity = LaserParams::from_beta(kKappa, 1.0);
    CHECK_THAT(photon_number_for_pump(unity, 2.0 * kKappa.value), WithinRel(1.0, 1e-12));
    CHECK_THROWS_AS(photon_number_for_pump(unity, -1.0), std::invalid_argument);
}

TEST_CASE("pump <-> photon number round trip") {
    for (double beta : {1e-3, 0.1, 0.85, 1.0}) {
        const auto params = LaserParams::from_beta(kKappa, beta);
        for (double exponent = -6.0; exponent <= 6.0; exponent += 0.25) {
            const double p = std::pow(10.0, exponent);
            const double r = pump_for_photon_number(params, p);
            REQUIRE_THAT(photon_number_for_pump(params, r), WithinRel(p, 1e-9));
        }
    }
}

TEST_CASE("threshold pump rate") {
    CHECK_THAT(threshold_pump(LaserParams::from_beta(kKappa, 1.0)),
               WithinRel(2.0 * kKappa.value, 1e-15));
    CHECK_THAT(threshold_pump(LaserParams::from_beta(kKappa, 0.85)),
               WithinRel(kKappa.value * 2.176470588235294, 1e-12));

    SECTION("small-beta limit approaches kappa/beta") {
        const auto params = LaserParams::from_beta(kKappa, 1e-3);
        CHECK_THAT(threshold_pump(params), WithinRel(threshold_pump_small_beta(params), 1e-3));
        // And the relative gap is exactly beta.
        const double rel =
            threshold_pump(params) / threshold_pump_small_beta(params) - 1.0;
        CHECK_THAT(rel, WithinRel(1e-3, 1e-9));
    }
    SECTION("threshold falls with beta and with Q at fixed omega") {
        double prev = 1e300;
        for (double beta : {0.01, 0.1, 0.5, 1.0}) {
            const double th = threshold_pump(LaserParams::from_beta(kKappa, beta));
            CHECK(th < prev);
            prev = th;
        }
        const AngularFrequency omega = vacuum_wavelength_nm_to_angular(927.0);
        prev = 1e300;
        for (double q : {1e3, 1e4, 1e5}) {
            const double th = threshold_pump(
                LaserParams::from_beta(AngularFrequency(omega.value / (2.0 * q)), 0.85));
            CHECK(th < prev);
            prev = th;
        }
    }
}

TEST_CASE("light-light curve") {
    const Energy photon = photon_energy(vacuum_wavelength_nm_to_angular(927.0));

    SECTION("far below threshold the photon number is tiny and linear in R") {
        const auto params = LaserParams::from_beta(kKappa, 0.01);
        const double r = 1e-3 * threshold_pump(params);
        const auto curve = light_light_curve(params, {r}, photon);
        CHECK(curve[0].photon_number < 1e-2);
        // Small-p limit of the steady state: p ~ beta R / (2 kappa).
        CHECK_THAT(curve[0].photon_number,
                   WithinRel(params.beta * r / (2.0 * kKappa.value), 1e-2));
        CHECK_THAT(curve[0].output_power_w,
                   WithinRel(2.0 * kKappa.value * curve[0].photon_number * photon.value, 1e-12));
    }

    SECTION("threshold row carries p = 1") {
        const auto params = LaserParams::from_beta(kKappa, 0.85);
        const double th = threshold_pump(params);
        const auto curve = light_light_curve(params, {th / 2.0, th, th * 2.0}, photon);
        CHECK_THAT(curve[1].photon_number, WithinRel(1.0, 1e-9));
    }

    SECTION("beta = 1 is thresholdless: log-log slope never exceeds 1") {
        const auto params = LaserParams::from_beta(kKappa, 1.0);
        std::vector<double> sweep;
        for (int i = 0; i <= 200; ++i)
            sweep.push_back(threshold_pump(params) * std::pow(10.0, -2.0 + i * 0.02));
        const auto curve = light_light_curve(params, sweep, photon);
        double max_slope = 0.0;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            const double slope = (std::log(curve[i].photon_number) -
                                  std::log(curve[i - 1].photon_number)) /
                                 (std::log(curve[i].pump) - std::log(curve[i - 1].pump));
            max_slope = std::max(max_slope, slope);
        }
        CHECK(max_slope <= 1.0 + 1e-3);
    }

    SECTION("small beta shows a threshold jump bracketing R_th") {
        const auto params = LaserParams::from_beta(kKappa, 1e-3);
        // Coarse log sweep (about 3 points per decade) around threshold.
        std::vector<double> sweep;
        const double th = threshold_pump(params);
        for (int i = 0; i <= 18; ++i) sweep.push_back(th * std::pow(10.0, -3.0 + i / 3.0));
        const auto curve = light_light_curve(params, sweep, photon);
        std::size_t max_idx = 1;
        double max_slope = 0.0;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            const double slope = (std::log(curve[i].photon_number) -
                                  std::log(curve[i - 1].photon_number)) /
                                 (std::log(curve[i].pump) - std::log(curve[i - 1].pump));
            if (slope > max_slope) {
                max_slope = slope;
                max_idx = i;
            }
        }
        // The steepest segment sits within one sweep step of threshold.
        CHECK(curve[max_idx].pump >= th / std::pow(10.0, 2.0 / 3.0));
        CHECK(curve[max_idx - 1].pump <= th * std::pow(10.0, 2.0 / 3.0));
        CHECK(max_slope > 2.0);
    }

    SECTION("unsorted sweep is rejected") {
        const auto params = LaserParams::from_beta(kKappa, 0.5);
        CHECK_THROWS_AS(light_light_curve(params, {2.0, 1.0}, photon), std::invalid_argument);
    }
}

TEST_CASE("full steady state with explicit rates") {
    const double gamma_cavity = 5e8;
    const double gamma_other = 1e8;

    SECTION("infinite tau_nr reduces to the beta-only inversion") {
        const auto params = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other);
        for (double pump : {1e8, 1e10, 1e12, 1e14}) {
            const SteadyState ss = steady_state_full(params, pump);
            CHECK_THAT(ss.photon_number, WithinRel(photon_number_for_pump(params, pump), 1e-9));
        }
    }

    SECTION("no pump, no excitation") {
        const auto params = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other, 1e-9);
        const SteadyState ss = steady_state_full(params, 0.0);
        CHECK(ss.photon_number == 0.0);
        CHECK(ss.excited_emitters == 0.0);
    }

    SECTION("finite tau_nr strictly lowers p at fixed pump") {
        std::mt19937_64 gen(3);
        std::uniform_real_distribution<double> logu(-1.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            const double pump = threshold_pump(LaserParams::from_beta(kKappa, 0.8)) *
                                std::pow(10.0, logu(gen));
            const auto lossless = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other);
            const auto lossy = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other, 2e-9);
            CHECK(steady_state_full(lossy, pump).photon_number <
                  steady_state_full(lossless, pump).photon_number);
        }
    }

    SECTION("steady states satisfy both rate equations") {
        std::mt19937_64 gen(31);
        std::uniform_real_distribution<double> logp(7.0, 13.0);
        for (int i = 0; i < 200; ++i) {
            const double pump = std::pow(10.0, logp(gen));
            const auto params = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other, 5e-9);
            const SteadyState ss = steady_state_full(params, pump);
            const double p = ss.photon_number, n = ss.excited_emitters;

            const double dn = pump - n * gamma_other - n * gamma_cavity * (p + 1.0) -
                              n / params.tau_nr;
            const double dp = -2.0 * kKappa.value * p + n * gamma_cavity * (p + 1.0);
            REQUIRE(std::abs(dn) <= 1e-9 * pump);
            REQUIRE(std::abs(dp) <= 1e-9 * std::max(2.0 * kKappa.value * p, 1e-300));
        }
    }

    SECTION("photon number rises monotonically with pump") {
        const auto params = LaserParams::from_rates(kKappa, gamma_cavity, gamma_other, 5e-9);
        double prev = -1.0;
        for (double exponent = 6.0; exponent <= 14.0; exponent += 0.1) {
            const double p = steady_state_full(params, std::pow(10.0, exponent)).photon_number;
            CHECK(p > prev);
            prev = p;
        }
    }

    SECTION("beta-only parameters cannot run the full model") {
        CHECK_THROWS_AS(steady_state_full(LaserParams::from_beta(kKappa, 0.5), 1e9),
                        std::invalid_argument);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(LaserParams::from_beta(kKappa, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(LaserParams::from_beta(kKappa, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(LaserParams::from_beta(AngularFrequency(0.0), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(LaserParams::from_rates(kKappa, 0.0, 1e8), std::invalid_argument);
    // beta derived from rates: Gamma_c/(Gamma_c + Gamma_o).
    CHECK_THAT(LaserParams::from_rates(kKappa, 3e8, 1e8).beta, WithinRel(0.75, 1e-15));
}
