// jaynes_cummings.hpp: lossless two-level emitter coupled to one cavity
// mode: dressed-state manifolds, resonant Rabi dynamics, and the
// blockade/tunneling excitation frequencies of the anharmonic ladder.
//
// The Hamiltonian is block-diagonal per photon manifold, so everything
// here is a closed form; no Fock-space matrices are built.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cqed/units.hpp"

namespace cqed {

struct LosslessSystem {
    AngularFrequency omega; // cavity
    AngularFrequency nu;    // emitter transition
    AngularFrequency g;     // coupling, >= 0

    LosslessSystem(AngularFrequency cavity, AngularFrequency emitter, AngularFrequency coupling)
        : omega(cavity), nu(emitter), g(coupling) {
        detail::require_positive(omega.value, "omega");
        detail::require_positive(nu.value, "nu");
        detail::require_nonnegative(g.value, "g");
    }

    /// delta = nu - omega; derived, never stored.
    [[nodiscard]] AngularFrequency detuning() const { return nu - omega; }
    [[nodiscard]] bool resonant() const { return detuning().value == 0.0; }
};

/// One rung of the dressed-state ladder: the pair built from the bare
/// states |ex,n> and |g,n+1>.
struct Manifold {
    int n = 0;
    Energy e_plus;
    Energy e_minus;
    Energy half_gap;           // the square-root term itself
    double mixing_angle = 0.0; // rad, in [0, pi/2]; pi/4 at zero detuning

    /// E+ - E-, carried as 2x the root term: subtracting the energies
    /// directly would lose ~3 digits to cancellation against the
    /// hbar*omega*(n+1) center at optical frequencies.
    [[nodiscard]] Energy splitting() const { return Energy(2.0 * half_gap.value); }
};

/// E(+/-) = hbar*omega*(n+1) +/- sqrt((hbar*delta/2)^2 + hbar^2 g^2 (n+1)).
inline Manifold dressed_energies(const LosslessSystem& sys, int n) {
    if (n < 0)
        throw std::invalid_argument("n: photon index must be >= 0");
    const double hbar = constants::hbar;
    const double delta = sys.detuning().value;
    const double half_delta = hbar * delta / 2.0;
    const double offdiag = hbar * sys.g.value * std::sqrt(n + 1.0);
    const double root = std::sqrt(half_delta * half_delta + offdiag * offdiag);
    const double center = hbar * sys.omega.value * (n + 1.0);
    return Manifold{n, Energy(center + root), Energy(center - root), Energy(root),
                    0.5 * std::atan2(2.0 * sys.g.value * std::sqrt(n + 1.0), delta)};
}

struct AnticrossingPoint {
    AngularFrequency delta;
    Energy e_plus;
    Energy e_minus;
    Energy gap; // e_plus - e_minus, cancellation-free
};

/// Evaluates the manifold energies across a detuning sweep, holding the
/// cavity frequency fixed and moving the emitter (nu = omega + delta).
inline std::vector<AnticrossingPoint> anticrossing_curve(const LosslessSystem& sys_template,
                                                         int n,
                                                         const std::vector<AngularFrequency>& delta_sweep) {
    if (delta_sweep.empty())
        throw std::invalid_argument("delta_sweep: sweep must be non-empty");
    std::vector<AnticrossingPoint> out;
    out.reserve(delta_sweep.size());
    for (AngularFrequency d : delta_sweep) {
        LosslessSystem sys(sys_template.omega, sys_template.omega + d, sys_template.g);
        const Manifold m = dressed_energies(sys, n);
        out.push_back({d, m.e_plus, m.e_minus, m.splitting()});
    }
    return out;
}

struct RabiProbabilities {
    double excited = 0.0; // |C_{ex,n}|^2
    double ground = 0.0;  // |C_{g,n+1}|^2
};

/// Resonant Rabi oscillation starting from |ex,n> at t = 0:
///   p_excited = (1 + cos(2 g sqrt(n+1) t)) / 2.
/// Only the delta = 0 solution is implemented; detuned systems are
/// rejected (the off-resonant closed form is out of scope).
inline RabiProbabilities rabi_probabilities(const LosslessSystem& sys, int n, double t_s) {
    if (n < 0)
        throw std::invalid_argument("n: photon index must be >= 0");
    detail::require_finite(t_s, "t");
    if (!sys.resonant())
        throw std::invalid_argument(
            "detuning: rabi_probabilities implements the resonant (delta = 0) solution only");
    const double c = std::cos(2.0 * sys.g.value * std::sqrt(n + 1.0) * t_s);
    const double p_ground = (1.0 - c) / 2.0;
    return RabiProbabilities{1.0 - p_ground, p_ground};
}

/// First-manifold excitation frequency omega +/- g (one photon admitted,
/// the second repelled by the anharmonicity).
inline AngularFrequency blockade_frequency(const LosslessSystem& sys, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign: must be +1 or -1");
    if (!sys.resonant())
        throw std::invalid_argument("detuning: blockade_frequency requires delta = 0");
    return AngularFrequency(sys.omega.value + sign * sys.g.value);
}

/// Per-photon frequency of the two-photon route into the second manifold:
/// E(+/-)(n=1) / (2 hbar) = omega +/- g/sqrt(2).
inline AngularFrequency tunneling_frequency(const LosslessSystem& sys, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign: must be +1 or -1");
    if (!sys.resonant())
        throw std::invalid_argument("detuning: tunneling_frequency requires delta = 0");
    return AngularFrequency(sys.omega.value + sign * sys.g.value / std::numbers::sqrt2);
}

/// Manifolds 0..n_max. Splittings grow as sqrt(n+1), the anharmonicity
/// that makes blockade possible.
inline std::vector<Manifold> ladder_table(const LosslessSystem& sys, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max: must be >= 0");
    std::vector<Manifold> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(dressed_energies(sys, n));
    return out;
}

} // namespace cqed
