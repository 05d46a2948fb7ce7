#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

#include "cqed/io.hpp"
#include "cqed/qdot.hpp"
#include "cqed/units.hpp"
#include "quadrature.hpp"

using namespace cqed;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
QDotSpec inas_like_spec() {
    QDotSpec spec;
    spec.m_eff_e = 0.05 * constants::electron_mass;
    spec.m_eff_h = 0.05 * constants::electron_mass;
    spec.hbar_omega0_e = Energy::from_mev(50.0);
    spec.hbar_omega0_h = Energy::from_mev(50.0);
    spec.height = 5e-9;
    spec.band_gap = Energy::from_ev(1.0);
    return spec;
}
} // namespace

TEST_CASE("level energies") {
    const QDotSpec spec = inas_like_spec();

    SECTION("ground state, pinned by independent evaluation") {
        // 50 meV + pi^2 hbar^2 / (2 m L^2) = 50 + 300.824... meV.
        const Energy e = level_energy(spec, Particle::electron, {0, 0, 1});
        CHECK_THAT(e.mev(), WithinRel(350.82412977428389, 1e-12));
    }
    SECTION("harmonic ladder spacing is exactly hbar omega0") {
        const Energy ground = level_energy(spec, Particle::electron, {0, 0, 1});
        const Energy first = level_energy(spec, Particle::electron, {1, 0, 1});
        CHECK_THAT((first - ground).value, WithinRel(spec.hbar_omega0_e.value, 1e-12));
    }
    SECTION("z quantization scales as nz^2") {
        const double well1 = level_energy(spec, Particle::electron, {0, 0, 1}).value -
                             spec.hbar_omega0_e.value;
        const double diff21 = level_energy(spec, Particle::electron, {0, 0, 2}).value -
                              level_energy(spec, Particle::electron, {0, 0, 1}).value;
        CHECK_THAT(diff21, WithinRel(3.0 * well1, 1e-12));
    }
    SECTION("strictly increasing in every quantum number") {
        const auto e = [&](int nx, int ny, int nz) {
            return level_energy(spec, Particle::hole, {nx, ny, nz}).value;
        };
        CHECK(e(1, 0, 1) > e(0, 0, 1));
        CHECK(e(0, 1, 1) > e(0, 0, 1));
        CHECK(e(0, 0, 2) > e(0, 0, 1));
    }
    SECTION("index validation") {
        CHECK_THROWS_AS(level_energy(spec, Particle::electron, {0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(level_energy(spec, Particle::electron, {-1, 0, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("shell degeneracy matches brute-force enumeration") {
    CHECK(level_degeneracy(0) == 1);
    CHECK(level_degeneracy(1) == 2);
    CHECK(level_degeneracy(5) == 6);
    for (int shell = 0; shell <= 10; ++shell) {
        int count = 0;
        for (int nx = 0; nx <= shell; ++nx)
            for (int ny = 0; ny <= shell; ++ny)
                if (nx + ny == shell) ++count;
        CHECK(level_degeneracy(shell) == count);
    }
    CHECK_THROWS_AS(level_degeneracy(-1), std::invalid_argument);
}

TEST_CASE("envelope wavefunction nodes and support") {
    const QDotSpec spec = inas_like_spec();

    CHECK(envelope_wavefunction(spec, Particle::electron, {0, 0, 1}, 0.0, 0.0, 0.0) == 0.0);
    CHECK(envelope_wavefunction(spec, Particle::electron, {0, 0, 1}, 0.0, 0.0, spec.height) ==
          0.0);
    CHECK(envelope_wavefunction(spec, Particle::electron, {1, 0, 1}, 0.0, 1e-9,
                                spec.height / 2.0) == 0.0); // H_1(0) = 0
    CHECK(envelope_wavefunction(spec, Particle::electron, {0, 0, 1}, 0.0, 0.0, -1e-12) == 0.0);
    CHECK(envelope_wavefunction(spec, Particle::electron, {0, 0, 1}, 0.0, 0.0,
                                spec.height + 1e-12) == 0.0);
    CHECK(envelope_wavefunction(spec, Particle::electron, {0, 0, 1}, 0.0, 0.0,
                                spec.height / 2.0) > 0.0);
}

TEST_CASE("envelope states are orthonormal (3D quadrature)") {
    const QDotSpec spec = inas_like_spec();
    const double omega0 = spec.hbar_omega0_e.value / constants::hbar;
    const double alpha = std::sqrt(spec.m_eff_e * omega0 / constants::hbar);
    const double bound = 8.5 / alpha;

    // States through in-plane shell 3, both confined z levels.
    std::vector<LevelIndex> states;
    for (int shell = 0; shell <= 3; ++shell)
        for (int nx = 0; nx <= shell; ++nx)
            for (int nz : {1, 2})
                states.push_back({nx, shell - nx, nz});

    const auto rule = testutil::gauss_legendre(64);
    std::vector<double> xs(64), xw(64), zs(64), zw(64);
    for (int i = 0; i < 64; ++i) {
        xs[i] = bound * rule.nodes[i];
        xw[i] = bound * rule.weights[i];
        zs[i] = spec.height * 0.5 * (rule.nodes[i] + 1.0);
        zw[i] = spec.height * 0.5 * rule.weights[i];
    }

    // Cache psi on the tensor grid, then overlap by full 3D quadrature.
    std::vector<std::vector<double>> cached;
    cached.reserve(states.size());
    for (const auto& idx : states) {
        std::vector<double> vals(64 * 64 * 64);
        std::size_t k = 0;
        for (int ix = 0; ix < 64; ++ix)
            for (int iy = 0; iy < 64; ++iy)
                for (int iz = 0; iz < 64; ++iz, ++k)
                    vals[k] = envelope_wavefunction(spec, Particle::electron, idx, xs[ix], xs[iy],
                                                    zs[iz]);
        cached.push_back(std::move(vals));
    }

    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = a; b < states.size(); ++b) {
            double overlap = 0.0;
            std::size_t k = 0;
            for (int ix = 0; ix < 64; ++ix)
                for (int iy = 0; iy < 64; ++iy) {
                    const double wxy = xw[ix] * xw[iy];
                    double zsum = 0.0;
                    for (int iz = 0; iz < 64; ++iz, ++k)
                        zsum += cached[a][k] * cached[b][k] * zw[iz];
                    overlap += wxy * zsum;
                }
            const double expected = (a == b) ? 1.0 : 0.0;
            REQUIRE_THAT(overlap, WithinAbs(expected, 1e-6));
        }
    }
}

TEST_CASE("envelope equation residual converges as O(h^2)") {
    const QDotSpec spec = inas_like_spec();
    const Particle particle = Particle::electron;
    const LevelIndex idx{1, 1, 1};
    const double m = spec.m_eff_e;
    const double omega0 = spec.hbar_omega0_e.value / constants::hbar;
    const double alpha = std::sqrt(m * omega0 / constants::hbar);
    const double e_level = level_energy(spec, particle, idx).value;

    const auto residual = [&](double h) {
        const double points[3][3] = {{0.31 / alpha, -0.47 / alpha, 0.41 * spec.height},
                                     {-0.55 / alpha, 0.22 / alpha, 0.57 * spec.height},
                                     {0.12 / alpha, 0.81 / alpha, 0.33 * spec.height}};
        double worst = 0.0;
        for (const auto& pt : points) {
            const double x = pt[0], y = pt[1], z = pt[2];
            const auto psi = [&](double px, double py, double pz) {
                return envelope_wavefunction(spec, particle, idx, px, py, pz);
            };
            const double lap = (psi(x + h, y, z) - 2.0 * psi(x, y, z) + psi(x - h, y, z) +
                                psi(x, y + h, z) - 2.0 * psi(x, y, z) + psi(x, y - h, z) +
                                psi(x, y, z + h) - 2.0 * psi(x, y, z) + psi(x, y, z - h)) /
                               (h * h);
            const double v = 0.5 * m * omega0 * omega0 * (x * x + y * y);
            const double lhs = -constants::hbar * constants::hbar / (2.0 * m) * lap +
                               v * psi(x, y, z);
            worst = std::max(worst, std::abs(lhs - e_level * psi(x, y, z)) /
                                        std::abs(e_level * psi(x, y, z)));
        }
        return worst;
    };

    const double h0 = 0.02 / alpha;
    const double r1 = residual(h0);
    const double r2 = residual(h0 / 2.0);
    const double ratio = r1 / r2;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("transition lines") {
    const QDotSpec spec = inas_like_spec();

    SECTION("lowest line is the ground-ground pair") {
        const auto lines = transition_lines(spec, 1);
        REQUIRE(lines.size() == 9); // 3 electron x 3 hole states
        const Energy expected = spec.band_gap +
                                level_energy(spec, Particle::electron, {0, 0, 1}) +
                                level_energy(spec, Particle::hole, {0, 0, 1});
        CHECK_THAT(lines.front().photon_energy.value, WithinRel(expected.value, 1e-12));
        CHECK(lines.front().electron.shell() == 0);
        CHECK(lines.front().hole.shell() == 0);
    }
    SECTION("sorted ascending, all above the band gap") {
        const auto lines = transition_lines(spec, 2);
        REQUIRE(lines.size() == 36);
        for (std::size_t i = 1; i < lines.size(); ++i)
            CHECK(lines[i].photon_energy.value >= lines[i - 1].photon_energy.value);
        for (const auto& line : lines)
            CHECK(line.photon_energy.value >= spec.band_gap.value);
    }
}

TEST_CASE("first-order Coulomb correction by Monte Carlo") {
    const QDotSpec spec = inas_like_spec();
    const double epsilon_r = 12.9;

    SECTION("identical seeds give bit-identical results") {
        const auto a = coulomb_correction_mc(spec, epsilon_r, 20000, 42);
        const auto b = coulomb_correction_mc(spec, epsilon_r, 20000, 42);
        CHECK(a.delta_e.value == b.delta_e.value);
        CHECK(a.std_err.value == b.std_err.value);
        const auto c = coulomb_correction_mc(spec, epsilon_r, 20000, 43);
        CHECK(c.delta_e.value != a.delta_e.value);
    }

    SECTION("negative shift in the expected decade") {
        const auto result = coulomb_correction_mc(spec, epsilon_r, 100000, 7);
        CHECK(result.delta_e.value < 0.0);
        const double magnitude_mev = -result.delta_e.mev();
        CHECK(magnitude_mev > 10.0);
        CHECK(magnitude_mev < 40.0);
        CHECK(result.std_err.value > 0.0);
    }

    SECTION("dilating all lengths by s scales the shift by 1/s") {
        const double s = 2.0;
        QDotSpec dilated = spec;
        dilated.hbar_omega0_e = Energy(spec.hbar_omega0_e.value / (s * s));
        dilated.hbar_omega0_h = Energy(spec.hbar_omega0_h.value / (s * s));
        dilated.height = spec.height * s;

        const auto base = coulomb_correction_mc(spec, epsilon_r, 200000, 11);
        const auto scaled = coulomb_correction_mc(dilated, epsilon_r, 200000, 13);
        const double combined_err =
            std::sqrt(base.std_err.value * base.std_err.value +
                      s * s * scaled.std_err.value * scaled.std_err.value);
        CHECK(std::abs(base.delta_e.value - s * scaled.delta_e.value) <= 3.0 * combined_err);
    }

    SECTION("standard error shrinks as 1/sqrt(samples)") {
        const auto small = coulomb_correction_mc(spec, epsilon_r, 50000, 3);
        const auto big = coulomb_correction_mc(spec, epsilon_r, 100000, 3);
        const double ratio = small.std_err.value / big.std_err.value;
        CHECK(ratio > std::numbers::sqrt2 / 1.5);
        CHECK(ratio < std::numbers::sqrt2 * 1.5);
    }

    SECTION("input validation") {
        CHECK_THROWS_AS(coulomb_correction_mc(spec, epsilon_r, 9999, 1), std::invalid_argument);
        CHECK_THROWS_AS(coulomb_correction_mc(spec, 0.5, 20000, 1), std::invalid_argument);
    }
}

TEST_CASE("charging energy note") {
    const auto range = charging_energy_note();
    CHECK(range.min.mev() == 10.0);
    CHECK(range.max.mev() == 20.0);
    CHECK(range.min.value < range.max.value);
}

TEST_CASE("sanity warnings flag unusual confinement") {
    QDotSpec spec = inas_like_spec();
    CHECK(spec.sanity_warnings().empty());
    spec.hbar_omega0_h = Energy::from_mev(0.5);
    const auto warnings = spec.sanity_warnings();
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("hbar_omega0_h") != std::string::npos);
}

TEST_CASE("QDotSpec loads from the documented JSON schema") {
    const auto dir = std::filesystem::temp_directory_path() / "cqed_qdot_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "dot.json").string();
    {
        std::ofstream out(path);
        out << R"({"m_eff_e_m0": 0.05, "m_eff_h_m0": 0.3, "hbar_omega0_e_meV": 50,
                   "hbar_omega0_h_meV": 25, "L_nm": 5, "band_gap_eV": 1.0, "epsilon_r": 12.9})";
    }
    const QDotConfig cfg = load_qdot_config(path);
    CHECK_THAT(cfg.spec.m_eff_e, WithinRel(0.05 * constants::electron_mass, 1e-15));
    CHECK_THAT(cfg.spec.hbar_omega0_h.mev(), WithinRel(25.0, 1e-12));
    CHECK_THAT(cfg.spec.height, WithinRel(5e-9, 1e-15));
    CHECK(cfg.epsilon_r == 12.9);

    {
        std::ofstream out(path);
        out << R"({"m_eff_e_m0": 0.05})";
    }
    CHECK_THROWS_WITH(load_qdot_config(path), Catch::Matchers::ContainsSubstring("m_eff_h_m0"));
    std::filesystem::remove_all(dir);
}
