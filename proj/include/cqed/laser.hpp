// laser.hpp: steady state of the two-equation laser rate model
//
//   dN/dt = R_pump - N*Gamma_other - N*Gamma_cavity*(p+1) - N/tau_nr
//   dp/dt = -2*kappa*p + N*Gamma_cavity*(p+1)
//
// With the non-radiative term dropped the steady state collapses to
//   R_pump = (2*kappa*p / (p+1)) * (1/beta + p),
// which is what the beta-only operations below use. steady_state_full
// keeps the tau_nr term and needs explicit rates.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cqed/units.hpp"

namespace cqed {

struct LaserParams {
    AngularFrequency kappa; // cavity field decay rate, > 0
    double beta = 1.0;      // spontaneous emission coupling factor, (0, 1]

    // Explicit per-emitter rates; required by steady_state_full only.
    double gamma_cavity = 0.0; // Gamma_cavity, 1/s
    double gamma_other = 0.0;  // Gamma_other, 1/s
    double tau_nr = std::numeric_limits<double>::infinity(); // s

    static LaserParams from_beta(AngularFrequency kappa, double beta) {
        LaserParams p;
        p.kappa = kappa;
        p.beta = beta;
        p.validate();
        return p;
    }

    /// beta is derived from the rates themselves, so the two views can
    /// never disagree.
    static LaserParams from_rates(AngularFrequency kappa, double gamma_cavity,
                                  double gamma_other,
                                  double tau_nr = std::numeric_limits<double>::infinity()) {
        detail::require_positive(gamma_cavity, "gamma_cavity");
        detail::require_nonnegative(gamma_other, "gamma_other");
        LaserParams p;
        p.kappa = kappa;
        p.gamma_cavity = gamma_cavity;
        p.gamma_other = gamma_other;
        p.tau_nr = tau_nr;
        p.beta = gamma_cavity / (gamma_cavity + gamma_other);
        p.validate();
        return p;
    }

    [[nodiscard]] bool has_explicit_rates() const { return gamma_cavity > 0.0; }

    void validate() const {
        detail::require_positive(kappa.value, "kappa");
        if (!(beta > 0.0) || beta > 1.0)
            throw std::invalid_argument("beta: must be in (0, 1]");
        detail::require_nonnegative(gamma_cavity, "gamma_cavity");
        detail::require_nonnegative(gamma_other, "gamma_other");
        if (!(tau_nr > 0.0))
            throw std::invalid_argument("tau_nr: must be > 0 (may be infinite)");
    }
};

namespace detail {
/// Unique nonnegative root of 2*kappa*p^2 + b*p - r = 0 (r >= 0), picking
/// the cancellation-free branch of the quadratic formula.
inline double laser_quadratic_root(double kappa, double b, double r) {
    if (r == 0.0) return 0.0;
    const double disc = std::sqrt(b * b + 8.0 * kappa * r);
    return (b >= 0.0) ? 2.0 * r / (b + disc) : (disc - b) / (4.0 * kappa);
}
} // namespace detail

/// R_pump(p) = (2*kappa*p / (p+1)) * (1/beta + p); strictly increasing.
inline double pump_for_photon_number(const LaserParams& params, double p) {
    params.validate();
    detail::require_nonnegative(p, "p");
    return 2.0 * params.kappa.value * p / (p + 1.0) * (1.0 / params.beta + p);
}

/// Inverse of pump_for_photon_number: the nonnegative root of
/// 2*kappa*p^2 + (2*kappa/beta - R)*p - R = 0.
inline double photon_number_for_pump(const LaserParams& params, double pump_per_s) {
    params.validate();
    detail::require_nonnegative(pump_per_s, "pump");
    const double k = params.kappa.value;
    return detail::laser_quadratic_root(k, 2.0 * k / params.beta - pump_per_s, pump_per_s);
}

/// Threshold (mean photon number 1): R_th = kappa * (1 + 1/beta).
inline double threshold_pump(const LaserParams& params) {
    params.validate();
    return params.kappa.value * (1.0 + 1.0 / params.beta);
}

/// The conventional-laser approximation R_th ~ kappa/beta, valid for
/// beta << 1. Reported separately so the exact value stays the default.
inline double threshold_pump_small_beta(const LaserParams& params) {
    params.validate();
    return params.kappa.value / params.beta;
}

struct LightCurvePoint {
    double pump = 0.0;           // 1/s
    double photon_number = 0.0;  // p
    double output_power_w = 0.0; // 2*kappa*p*hbar*omega, unit collection
};

/// Light-out vs pump-in. The power proxy multiplies the photon loss rate
/// 2*kappa*p by the photon energy; W assuming unit collection efficiency.
inline std::vector<LightCurvePoint> light_light_curve(const LaserParams& params,
                                                      const std::vector<double>& pump_sweep_per_s,
                                                      Energy photon_energy) {
    params.validate();
    detail::require_positive(photon_energy.value, "photon_energy");
    for (std::size_t i = 0; i + 1 < pump_sweep_per_s.size(); ++i)
        if (pump_sweep_per_s[i] > pump_sweep_per_s[i + 1])
            throw std::invalid_argument("pump_sweep: must be sorted ascending");
    std::vector<LightCurvePoint> out;
    out.reserve(pump_sweep_per_s.size());
    for (double r : pump_sweep_per_s) {
        const double p = photon_number_for_pump(params, r);
        out.push_back({r, p, 2.0 * params.kappa.value * p * photon_energy.value});
    }
    return out;
}

struct SteadyState {
    double photon_number = 0.0;   // p
    double excited_emitters = 0.0; // N
    double pump = 0.0;            // R_pump, 1/s
};

/// Full steady state including the non-radiative channel. With
/// tau_nr = infinity this reproduces photon_number_for_pump exactly.
inline SteadyState steady_state_full(const LaserParams& params, double pump_per_s) {
    params.validate();
    detail::require_nonnegative(pump_per_s, "pump");
    if (!params.has_explicit_rates())
        throw std::invalid_argument(
            "gamma_cavity: steady_state_full needs explicit rates (use LaserParams::from_rates)");

    const double k = params.kappa.value;
    // R = (2*kappa*p/(p+1)) * (C + p),  C = (Gamma_other + 1/tau_nr)/Gamma_cavity + 1
    const double c = (params.gamma_other + 1.0 / params.tau_nr) / params.gamma_cavity + 1.0;
    const double p = detail::laser_quadratic_root(k, 2.0 * k * c - pump_per_s, pump_per_s);
    const double n = 2.0 * k * p / (params.gamma_cavity * (p + 1.0));
    return SteadyState{p, n, pump_per_s};
}

} // namespace cqed
