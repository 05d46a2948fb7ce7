// coupling.hpp: emitter-field coupling parameter g = g0 * psi * cos(xi).
//
// g0 is the maximum coupling (emitter at the energy-density maximum,
// dipole aligned with the local field); psi and cos(xi) are the spatial
// and polarization degradation factors read off a sampled field grid.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "cqed/field_grid.hpp"
#include "cqed/units.hpp"

namespace cqed {

struct DipoleSpec {
    double mu_eg = 0.0;                     // |mu_eg|, C m
    std::array<double, 3> orientation{};    // real unit vector

    DipoleSpec(double mu, std::array<double, 3> dir) : mu_eg(mu), orientation(dir) {
        detail::require_nonnegative(mu, "mu_eg");
        const double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("orientation: must be a unit vector (|norm - 1| <= 1e-12)");
    }
};

struct CouplingResult {
    AngularFrequency g0;       // max coupling, rad/s
    std::complex<double> psi;  // field amplitude ratio E(r_E)/|E(r_M)|
    double cos_xi = 0.0;       // |mu_hat . e_hat|, in [0, 1]
    AngularFrequency g;        // g0 * |psi| * cos_xi
};

/// g0 = (mu_eg/hbar) sqrt(hbar*omega / (2 eps_M V_mode)).
/// eps_M is the absolute permittivity (F/m) at the energy-density maximum.
inline AngularFrequency vacuum_rabi_g0(double mu_eg_cm, AngularFrequency omega,
                                       double eps_m_f_per_m, double v_mode_m3) {
    detail::require_positive(mu_eg_cm, "mu_eg");
    detail::require_positive(omega.value, "omega");
    detail::require_positive(eps_m_f_per_m, "eps_M");
    detail::require_positive(v_mode_m3, "v_mode");
    const double hbar = constants::hbar;
    return AngularFrequency(mu_eg_cm / hbar *
                            std::sqrt(hbar * omega.value / (2.0 * eps_m_f_per_m * v_mode_m3)));
}

/// Evaluates g at a voxel: psi from the field-amplitude ratio against the
/// energy-density maximum, cos(xi) from the dipole/field alignment there.
/// A zero field at the location is valid and yields g = 0.
///
/// psi keeps a complex phase (taken from the largest Cartesian component
/// of E at the location); only |psi| enters g.
inline CouplingResult coupling_at_location(const FieldGrid& grid, const DipoleSpec& dipole,
                                           VoxelIndex location, AngularFrequency omega) {
    const std::size_t loc = grid.flat_index(location);
    const std::size_t max_idx = grid.energy_density_argmax();

    const double e_max = grid.field_at(max_idx).norm();
    if (e_max <= 0.0)
        throw std::invalid_argument("e_field: all-zero field has no coupling");

    // mu_eg = 0 is a legal dipole and simply decouples.
    const double eps_m_abs = grid.epsilon_at(max_idx) * constants::epsilon0;
    const AngularFrequency g0 =
        dipole.mu_eg > 0.0
            ? vacuum_rabi_g0(dipole.mu_eg, omega, eps_m_abs, mode_volume(grid))
            : AngularFrequency(0.0);

    const Vec3c& e = grid.field_at(loc);
    const double e_abs = e.norm();
    if (e_abs == 0.0)
        return CouplingResult{g0, {0.0, 0.0}, 0.0, AngularFrequency(0.0)};

    // Phase convention: phase of the dominant Cartesian component.
    const std::complex<double> comps[3] = {e.x, e.y, e.z};
    const std::complex<double>* dominant = &comps[0];
    for (const auto& c : comps)
        if (std::abs(c) > std::abs(*dominant)) dominant = &c;
    const std::complex<double> phase = *dominant / std::abs(*dominant);
    const std::complex<double> psi = phase * (e_abs / e_max);

    const std::complex<double> mu_dot_e = dipole.orientation[0] * e.x +
                                          dipole.orientation[1] * e.y +
                                          dipole.orientation[2] * e.z;
    const double cos_xi = std::clamp(std::abs(mu_dot_e) / e_abs, 0.0, 1.0);

    return CouplingResult{g0, psi, cos_xi,
                          AngularFrequency(g0.value * std::abs(psi) * cos_xi)};
}

} // namespace cqed
