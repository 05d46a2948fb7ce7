#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "cqed/units.hpp"

using namespace cqed;
using Catch::Matchers::WithinRel;

TEST_CASE("linear GHz to angular frequency") {
    CHECK(linear_ghz_to_angular(0.0).value == 0.0);
    CHECK_THAT(linear_ghz_to_angular(1.0).value,
               WithinRel(2.0 * std::numbers::pi * 1e9, 1e-15));
    // 2*pi*20e9, evaluated independently at high precision.
    CHECK_THAT(linear_ghz_to_angular(20.0).value, WithinRel(1.2566370614359173e11, 1e-12));
}

TEST_CASE("vacuum wavelength to angular frequency") {
    const double two_pi_c = 2.0 * std::numbers::pi * constants::speed_of_light;
    CHECK_THAT(vacuum_wavelength_to_angular(two_pi_c).value, WithinRel(1.0, 1e-12));
    // 2*pi*c/lambda0, evaluated independently at high precision.
    CHECK_THAT(vacuum_wavelength_nm_to_angular(927.0).value,
               WithinRel(2.0319865882511902e15, 1e-12));
    CHECK_THAT(vacuum_wavelength_nm_to_angular(1550.0).value,
               WithinRel(1.2152590756831311e15, 1e-12));
}

TEST_CASE("conversion round trips are identities") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ghz(1e-3, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double f = ghz(gen);
        CHECK_THAT(angular_to_linear_ghz(linear_ghz_to_angular(f)), WithinRel(f, 1e-12));
    }
    for (double mev : {0.01, 1.0, 50.0, 1340.0})
        CHECK_THAT(Energy::from_mev(mev).mev(), WithinRel(mev, 1e-12));
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(linear_ghz_to_angular(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(linear_ghz_to_angular(INFINITY), std::invalid_argument);
    CHECK_THROWS_AS(vacuum_wavelength_to_angular(0.0), std::invalid_argument);
    CHECK_THROWS_AS(vacuum_wavelength_to_angular(-927e-9), std::invalid_argument);
    CHECK_THROWS_AS(AngularFrequency(INFINITY), std::invalid_argument);
    CHECK_THROWS_AS(Energy(std::nan("")), std::invalid_argument);
}

TEST_CASE("pinned physical constants") {
    CHECK(constants::electron_charge == 1.602176634e-19);
    CHECK(constants::electron_mass == 9.1093837e-31);
    CHECK(constants::speed_of_light == 299792458.0);
}

TEST_CASE("photon energy of a 927 nm mode is about 1.34 eV") {
    const Energy e = photon_energy(vacuum_wavelength_nm_to_angular(927.0));
    CHECK_THAT(e.ev(), WithinRel(1.3375, 1e-3));
}
