// Walks one strongly coupled dot-cavity device through the library:
// regime, eigenmodes, ladder, blockade filtering, Purcell numbers, and
// the laser threshold the same cavity would support.

#include <cstdio>

#include "cqed/cqed.hpp"

using namespace cqed;

int main() {
    const double lambda0_nm = 927.0;
    const double q = 10000.0;
    const AngularFrequency omega = vacuum_wavelength_nm_to_angular(lambda0_nm);
    const AngularFrequency g = linear_ghz_to_angular(25.0);
    const AngularFrequency kappa(omega.value / (2.0 * q));
    const AngularFrequency gamma = linear_ghz_to_angular(1.0);

    std::printf("device: lambda0 = %.0f nm, Q = %.0f, g/2pi = %.1f GHz\n", lambda0_nm, q,
                g.linear_ghz());
    std::printf("        kappa/2pi = %.2f GHz, gamma/2pi = %.2f GHz\n", kappa.linear_ghz(),
                gamma.linear_ghz());

    const LossySystem sys(omega, omega, g, kappa, gamma);
    std::printf("regime: %s\n", to_string(classify_regime(sys).regime));

    const auto modes = complex_eigenfrequencies(sys);
    if (const auto split = rabi_splitting(sys))
        std::printf("polaritons split by %.2f GHz (2g would be %.2f), linewidths %.2f GHz\n",
                    split->linear_ghz(), 2.0 * g.linear_ghz(),
                    2.0 * modes.plus.damping.linear_ghz());

    const LosslessSystem ideal(omega, omega, g);
    std::printf("ladder gaps (GHz):");
    for (const auto& manifold : ladder_table(ideal, 2))
        std::printf(" %.2f", manifold.splitting().value / constants::hbar / 2.0 /
                                 std::numbers::pi / 1e9);
    std::printf("  (anharmonic)\n");

    std::printf("blockade drive at omega %+.2f GHz, two-photon route at omega %+.2f GHz\n",
                (blockade_frequency(ideal, +1) - omega).linear_ghz(),
                (tunneling_frequency(ideal, +1) - omega).linear_ghz());
    std::printf("blockade output would be antibunched: g2(single photons) = %.2f\n",
                *g2_zero(FockDistribution::fock(1)));

    const double f_max = max_purcell_factor(q, 0.7);
    const double beta = beta_factor(f_max, 1.0);
    std::printf("same cavity in the weak-coupling picture: F_max = %.0f, beta = %.4f\n", f_max,
                beta);
    const auto laser = LaserParams::from_beta(kappa, beta);
    std::printf("rate-equation laser threshold: %.3g photons/s (thresholdless limit %.3g)\n",
                threshold_pump(laser), threshold_pump(LaserParams::from_beta(kappa, 1.0)));
    return 0;
}
