// purcell.hpp: spontaneous-emission modification by a cavity.
//
// Two routes to the Purcell factor are kept side by side on purpose:
//   max_purcell_factor : (3/4pi^2) (lambda/n)^3 Q/V  (Q/V form)
//   purcell_from_g     : (2 g^2/kappa) / (n Gamma0)  (rate form)
// They agree identically when fed consistent inputs; the test suite
// holds them against each other.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cqed/units.hpp"

namespace cqed {

struct PurcellInputs {
    double q = 0.0;           // quality factor, > 0
    double v_mode_norm = 0.0; // mode volume in units of (lambda/n)^3, > 0
    double psi_abs = 1.0;     // |psi|, spatial alignment, in [0, 1]
    double cos_xi = 1.0;      // polarization alignment, in [0, 1]
    AngularFrequency detuning;     // nu - omega
    AngularFrequency cavity_omega; // > 0

    void validate() const {
        detail::require_positive(q, "q");
        detail::require_positive(v_mode_norm, "v_mode_norm");
        if (psi_abs < 0.0 || psi_abs > 1.0)
            throw std::invalid_argument("psi_abs: must be in [0, 1]");
        if (cos_xi < 0.0 || cos_xi > 1.0)
            throw std::invalid_argument("cos_xi: must be in [0, 1]");
        detail::require_positive(cavity_omega.value, "cavity_omega");
    }
};

/// F_max = (3 / 4 pi^2) * Q / (V / (lambda/n)^3).
/// lambda here is the vacuum wavelength; lambda/n the material one.
inline double max_purcell_factor(double q, double v_mode_norm) {
    detail::require_positive(q, "q");
    detail::require_positive(v_mode_norm, "v_mode_norm");
    return 3.0 / (4.0 * std::numbers::pi * std::numbers::pi) * q / v_mode_norm;
}

/// Cavity density of optical states: a normalized Lorentzian of HWHM
/// omega/2Q centered at omega. Units s/rad; integrates to 1.
inline double density_of_states(AngularFrequency nu, AngularFrequency omega, double q) {
    detail::require_positive(q, "q");
    detail::require_positive(omega.value, "omega");
    const double hwhm = omega.value / (2.0 * q);
    const double off = nu.value - omega.value;
    return (1.0 / std::numbers::pi) * hwhm / (off * off + hwhm * hwhm);
}

/// F_eff = F_max * psi^2 * cos^2(xi) * D_c(nu)/D_c(omega).
/// The spectral factor is normalized to 1 at resonance, so a perfectly
/// placed resonant emitter recovers F_max.
inline double effective_purcell(const PurcellInputs& in) {
    in.validate();
    const double f_max = max_purcell_factor(in.q, in.v_mode_norm);
    const double hwhm = in.cavity_omega.value / (2.0 * in.q);
    const double spectral = hwhm * hwhm / (in.detuning.value * in.detuning.value + hwhm * hwhm);
    return f_max * in.psi_abs * in.psi_abs * in.cos_xi * in.cos_xi * spectral;
}

/// beta = F / (F + f): fraction of spontaneous emission captured by the
/// cavity mode. f is the non-cavity factor (about 1 outside a band gap,
/// below 1 inside one).
inline double beta_factor(double f_purcell, double f_other) {
    detail::require_nonnegative(f_purcell, "F");
    detail::require_nonnegative(f_other, "f");
    if (f_purcell + f_other <= 0.0)
        throw std::invalid_argument("F+f: at least one of F, f must be positive");
    return f_purcell / (f_purcell + f_other);
}

struct EmissionBudget {
    double purcell_factor = 0.0; // F
    double other_factor = 1.0;   // f
    [[nodiscard]] double beta() const { return beta_factor(purcell_factor, other_factor); }
};

/// Bulk spontaneous emission rate n * Gamma0, with the Einstein A
/// coefficient Gamma0 = mu_eg^2 nu^3 / (3 pi eps0 hbar c^3).
inline double bulk_rate(double mu_eg_cm, AngularFrequency nu, double n_index) {
    detail::require_positive(mu_eg_cm, "mu_eg");
    detail::require_positive(nu.value, "nu");
    detail::require_positive(n_index, "n_index");
    const double c = constants::speed_of_light;
    const double gamma0 = mu_eg_cm * mu_eg_cm * std::pow(nu.value, 3) /
                          (3.0 * std::numbers::pi * constants::epsilon0 * constants::hbar * c * c * c);
    return n_index * gamma0;
}

/// F = (2 g^2 / kappa) / bulk_rate.
inline double purcell_from_g(AngularFrequency g, AngularFrequency kappa, double bulk_rate_per_s) {
    detail::require_positive(g.value, "g");
    detail::require_positive(kappa.value, "kappa");
    detail::require_positive(bulk_rate_per_s, "bulk_rate");
    return 2.0 * g.value * g.value / kappa.value / bulk_rate_per_s;
}

} // namespace cqed
